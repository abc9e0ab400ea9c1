"""
Lefschetz decomposition of exterior forms.

Every form x of degree d is uniquely sum_l E^l p_l with p_l primitive of
degree d - 2l, i.e. p_l in V^(j) with j = g + 1 - d + 2l. The top level is
peeled first: F^L kills E^l p for l < L and scales E^L p by prod_{i<=L} i(j-i).
"""

import dataclasses
import logging
from fractions import Fraction
from typing import List, Tuple

from exterior.multivector import Coefficient, MultiVector
from lefschetz.components import component_basis
from lefschetz.sl2 import E_power, F_power

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class DecompositionTerm:
    """One summand E^level p with p primitive in V^(index)."""

    index: int
    level: int
    coordinates: Tuple[Coefficient, ...]
    primitive: MultiVector

    def to_json(self) -> dict:
        return {"j": self.index, "level": self.level,
                "coordinates": [c if isinstance(c, int) else str(c) for c in self.coordinates]}


def _string_factor(j: int, level: int) -> int:
    factor = 1
    for i in range(1, level + 1):
        factor *= i * (j - i)
    return factor


def _decompose_homogeneous(x: MultiVector, degree: int) -> List[DecompositionTerm]:
    g = x.genus
    terms = []
    remainder = x
    for level in range(degree // 2, max(0, degree - g) - 1, -1):
        if remainder.is_zero():
            break
        j = g + 1 - degree + 2 * level
        primitive = F_power(remainder, level) * Fraction(1, _string_factor(j, level))
        if primitive.is_zero():
            continue
        component = component_basis(g, j)
        terms.append(DecompositionTerm(j, level, tuple(component.coordinates(primitive)), primitive))
        remainder = remainder - E_power(primitive, level)
    if not remainder.is_zero():
        raise ArithmeticError(f"decomposition left a nonzero remainder in degree {degree}: {remainder}")
    return sorted(terms, key=lambda t: (t.index, t.level))


def decompose(x: MultiVector) -> List[DecompositionTerm]:
    """
    Lefschetz decomposition of an arbitrary form.

    Args:
        x: Form of any (mixed) degree

    Returns:
        List of DecompositionTerm, ordered by degree of x then by component
    """
    terms = []
    for degree in x.degrees():
        terms.extend(_decompose_homogeneous(x.degree_part(degree), degree))
    logger.debug(f"decomposed a genus-{x.genus} form into {len(terms)} terms")
    return terms


def reassemble(genus: int, terms: List[DecompositionTerm]) -> MultiVector:
    result = MultiVector.zero(genus)
    for term in terms:
        primitive = component_basis(genus, term.index).vector(term.coordinates)
        result = result + E_power(primitive, term.level)
    return result
