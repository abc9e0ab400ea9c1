"""
The theta_0 form on (^2 H) (x) (^2 H) and its operator realization.

theta_0(a^b (x) c^d) = l(a,c) l(b,d) - l(a,d) l(b,c) for a linking form l
with l(x,y) - l(y,x) = (x,y). With the standard form, theta_0(alpha (x) beta)
equals <Omega_g, nu(alpha) mu(beta) Omega_g>.
"""

from __future__ import annotations

import dataclasses
import logging
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

import numpy as np

from casson.curves import BoundingCurveSpec
from exterior.multivector import MultiVector, contract, inner, mask_to_list, wedge
from exterior.symplectic import skew_form_matrix
from utils.errors import NoWitnessFound, ShapeError

logger = logging.getLogger(__name__)

# (alpha, beta, coefficient) standing for coefficient * alpha (x) beta
TensorTerm = Tuple[MultiVector, MultiVector, int]


@dataclasses.dataclass(frozen=True)
class LinkingForm:
    """Integer matrix L with L[x][y] = l(x, y) on the standard basis."""

    genus: int
    matrix: np.ndarray = dataclasses.field(compare=False)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=object)
        n = 2 * self.genus
        if matrix.shape != (n, n):
            raise ShapeError(f"linking form must be {n}x{n}, got {matrix.shape}")
        if not np.array_equal(matrix - matrix.T, skew_form_matrix(self.genus)):
            raise ValueError("l(x, y) - l(y, x) must equal the intersection form")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def standard(cls, genus: int) -> LinkingForm:
        """l(a_i, b_j) = delta_ij, every other pairing 0."""
        matrix = np.zeros((2 * genus, 2 * genus), dtype=object)
        for i in range(genus):
            matrix[i, genus + i] = 1
        return cls(genus, matrix)

    def __call__(self, x: int, y: int) -> int:
        return self.matrix[x, y]


def _theta_monomials(left: int, right: int, linking: LinkingForm) -> int:
    a, b = mask_to_list(left)
    c, d = mask_to_list(right)
    return linking(a, c) * linking(b, d) - linking(a, d) * linking(b, c)


def theta0(terms: Sequence[TensorTerm], linking: LinkingForm) -> int:
    """
    Bilinear extension of theta_0 over decomposable 2-forms.

    Args:
        terms: (alpha, beta, coefficient) triples of degree-2 forms
        linking: Linking form on H_1

    Returns:
        int: sum of coefficient * theta_0(alpha (x) beta)

    Raises:
        ShapeError: If a factor has a term outside degree 2
    """
    total = 0
    for index, (alpha, beta, coefficient) in enumerate(terms):
        for side, form in (("left", alpha), ("right", beta)):
            if any(d != 2 for d in form.degrees()):
                raise ShapeError(f"term {index}: {side} factor has degrees {form.degrees()}, theta_0 needs 2-forms")
        for m, c in alpha.terms.items():
            for n, d in beta.terms.items():
                total += coefficient * c * d * _theta_monomials(m, n, linking)
    return total


def psi_pair(alpha: MultiVector, beta: MultiVector) -> int:
    """<Omega_g, nu(alpha) mu(beta) Omega_g>."""
    omega = MultiVector.handlebody_state(alpha.genus)
    return inner(omega, wedge(alpha, contract(beta, omega)))


def psi_value(terms: Sequence[TensorTerm]) -> int:
    return sum(coefficient * psi_pair(alpha, beta) for alpha, beta, coefficient in terms)


def twist_tensor(curve: BoundingCurveSpec) -> List[TensorTerm]:
    """t_C = -omega_C (x) omega_C."""
    omega = curve.omega()
    return [(omega, omega, -1)]


def _symmetrized(x: MultiVector, y: MultiVector) -> List[TensorTerm]:
    return [(x, y, 1), (y, x, 1)]


def t0_generator(genus: int, a: int, b: int, c: int, d: int) -> List[TensorTerm]:
    """a^b <-> c^d - a^c <-> b^d + a^d <-> b^c for basis bits a, b, c, d."""

    def pair(x, y):
        return wedge(MultiVector.basis(genus, 1 << x), MultiVector.basis(genus, 1 << y))

    terms = _symmetrized(pair(a, b), pair(c, d))
    terms += [(x, y, -k) for x, y, k in _symmetrized(pair(a, c), pair(b, d))]
    terms += _symmetrized(pair(a, d), pair(b, c))
    return terms


@dataclasses.dataclass(frozen=True)
class T0Witness:
    genus: int
    bits: Tuple[int, int, int, int]
    value: int

    def names(self) -> List[str]:
        g = self.genus
        return [f"a{i + 1}" if i < g else f"b{i - g + 1}" for i in self.bits]

    def to_json(self) -> dict:
        return {"g": self.genus, "generator": self.names(), "theta0": self.value}


def t0_witness(genus: int, linking: Optional[LinkingForm] = None) -> T0Witness:
    """
    First generator of T_0 on which theta_0 is nonzero.

    Basis 4-tuples are searched with repetition in basis order
    a_1..a_g, b_1..b_g.

    Raises:
        NoWitnessFound: If theta_0 vanishes on every generator
    """
    if genus < 2:
        raise ValueError(f"T_0 witnesses need genus >= 2, got {genus}")
    linking = linking or LinkingForm.standard(genus)
    searched = 0
    for bits in combinations_with_replacement(range(2 * genus), 4):
        searched += 1
        value = theta0(t0_generator(genus, *bits), linking)
        if value:
            logger.debug(f"theta_0 witness at genus {genus} after {searched} generators: {bits} -> {value}")
            return T0Witness(genus, bits, value)
    raise NoWitnessFound(f"theta_0 vanishes on all {searched} generators at genus {genus}")
