"""
Fundamental torsion weights and Alexander polynomials of closed words.

The weight Delta^(j) is the trace of the word on the multiplicity space
V^(j); the Alexander polynomial is the (-t)^Hhat-graded trace, which equals
sum_j [j]_{-t} Delta^(j).
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Dict, List, Mapping, Sequence

import numpy as np
from sympy import Matrix, Poly, symbols

from fn_tqft.cobordism import CobordismWord
from fn_tqft.functor import apply_word, degree_trace
from lefschetz.components import component_basis
from rings.laurent import LaurentPolynomial
from rings.quantum import quantum_integer, symmetrize_and_normalize
from utils.errors import NonIntegralTrace, ShapeError
from utils.rational_linalg import is_integral, solve_rational, trace

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class WeightVector:
    """Integer weights Delta^(j), j >= 1, for a genus-g context."""

    genus: int
    weights: Dict[int, int]
    sign_ambiguous: bool = False

    def __post_init__(self):
        cleaned = {int(j): int(w) for j, w in self.weights.items() if w}
        for j in cleaned:
            if j < 1 or j > self.genus + 1:
                raise ValueError(f"weight index {j} out of range for genus {self.genus}")
        object.__setattr__(self, "weights", dict(sorted(cleaned.items())))

    def __getitem__(self, j: int) -> int:
        return self.weights.get(j, 0)

    def as_list(self, length: int = None) -> List[int]:
        top = length if length is not None else (max(self.weights) if self.weights else 0)
        return [self[j] for j in range(1, top + 1)]

    def __neg__(self) -> WeightVector:
        return WeightVector(self.genus, {j: -w for j, w in self.weights.items()}, self.sign_ambiguous)

    def alexander(self) -> LaurentPolynomial:
        """sum_j [j]_{-t} Delta^(j)."""
        total = LaurentPolynomial.zero()
        for j, w in self.weights.items():
            total = total + quantum_integer(j) * w
        return total

    def value_at_one(self) -> int:
        """sum_j (-1)^(j-1) j Delta^(j), the Alexander polynomial at t = 1."""
        return sum((-1) ** (j - 1) * j * w for j, w in self.weights.items())

    def to_json(self) -> dict:
        data = {"weights": {str(j): w for j, w in self.weights.items()}}
        if self.sign_ambiguous:
            data["sign_ambiguous"] = True
        return data

    @classmethod
    def from_json(cls, data: Mapping, genus: int = None) -> WeightVector:
        weights = {int(j): int(w) for j, w in data["weights"].items()}
        if genus is None:
            genus = max(weights, default=1) - 1
        return cls(genus, weights, bool(data.get("sign_ambiguous", False)))


def component_matrix(word: CobordismWord, j: int) -> np.ndarray:
    """
    Integral matrix of a closed word on V^(j) in the saturated basis.

    Solves G X = B^T W B over QQ for the component basis B with Gram matrix G.

    Raises:
        NonIntegralTrace: If the compressed matrix is not integral
    """
    word.require_closed()
    component = component_basis(word.start_genus, j)
    if component.is_empty():
        return np.zeros((0, 0), dtype=object)
    images = [apply_word(word, b) for b in component.basis]
    compressed = solve_rational(component.gram, component.pairings(images))
    if not is_integral(compressed):
        raise NonIntegralTrace(f"compressed matrix of {word} on V^({j}) is not integral")
    return compressed


def component_trace(word: CobordismWord, j: int) -> int:
    """Trace of a closed word on V^(j)."""
    return int(trace(component_matrix(word, j)))


def fundamental_weights(word: CobordismWord) -> WeightVector:
    """Weights Delta^(j) = trace on V^(j) for j = 1..g+1."""
    word.require_closed()
    g = word.start_genus
    weights = {j: component_trace(word, j) for j in range(1, g + 2)}
    logger.debug(f"weights of {word}: {weights}")
    return WeightVector(g, weights, word.sign_ambiguous)


def alexander_trace(word: CobordismWord) -> LaurentPolynomial:
    """sum_d (-t)^(d - g) trace(W on degree d)."""
    word.require_closed()
    g = word.start_genus
    result = LaurentPolynomial.zero()
    for d in range(2 * g + 1):
        value = degree_trace(word, d)
        if value:
            sign = -1 if (d - g) % 2 else 1
            result = result + LaurentPolynomial.monomial(d - g, sign * value)
    return result


def _integer_matrix(matrix, size: int, name: str) -> Matrix:
    rows = [[int(x) for x in row] for row in np.asarray(matrix, dtype=object).reshape(-1, size)]
    if len(rows) != size:
        raise ShapeError(f"{name} must be {size}x{size}, got {len(rows)} rows")
    return Matrix(rows)


def alexander_from_presentation(a_plus, a_minus, tors_order: int, genus: int) -> LaurentPolynomial:
    """
    +- t^-g |Tors| det(A+ - t A-), symmetrized and sign-normalized.

    Args:
        a_plus: 2g x 2g integer matrix
        a_minus: 2g x 2g integer matrix
        tors_order: Order of the torsion of H_1 of the cut-open manifold
        genus: g

    Raises:
        NotSymmetrizable: If the determinant has no symmetric normal form
    """
    n = 2 * genus
    if tors_order < 1:
        raise ValueError(f"torsion order must be positive, got {tors_order}")
    t = symbols("t")
    if n == 0:
        return LaurentPolynomial({0: tors_order})
    plus = _integer_matrix(a_plus, n, "A+")
    minus = _integer_matrix(a_minus, n, "A-")
    det = (plus - t * minus).det()
    coefficients = Poly(det, t).all_coeffs()
    top = len(coefficients) - 1
    poly = LaurentPolynomial({top - k - genus: int(c) * tors_order for k, c in enumerate(coefficients)})
    return symmetrize_and_normalize(poly)


def weights_to_alexander(weights: Sequence[int]) -> LaurentPolynomial:
    """sum_j [j]_{-t} w_j for a 1-based weight list."""
    total = LaurentPolynomial.zero()
    for j, w in enumerate(weights, start=1):
        if w:
            total = total + quantum_integer(j) * w
    return total