"""
Lescop invariant routes and the Alexander polynomial to weight conversion.

For a symmetric, sign-normalized Alexander polynomial D the invariant is
D''(1)/2 - D(1)/12; in the weight basis it is sum_j L^(j) Delta^(j) with
L^(j) = (-1)^(j-1) j (2j^2 - 3) / 12.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction

from fn_tqft.weights import WeightVector
from rings.laurent import LaurentPolynomial
from rings.quantum import quantum_integer, symmetrize_and_normalize
from rings.rational import format_rational
from utils.errors import NonIntegralWeight, NotSymmetrizable

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class LescopValue:
    """An exact Lescop value; ``sign_certain`` is False when D(1) = 0."""

    value: Fraction
    sign_certain: bool

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        assert 12 % self.value.denominator == 0, f"Lescop value {self.value} outside (1/12)Z"

    def to_json(self) -> dict:
        return {"value": format_rational(self.value), "sign_certain": self.sign_certain}


def lescop_coefficient(j: int) -> Fraction:
    if j < 1:
        raise ValueError(f"Lescop coefficients are indexed by j >= 1, got {j}")
    return (-1) ** (j - 1) * Fraction(j * (2 * j * j - 3), 12)


def lescop_from_alexander(poly: LaurentPolynomial) -> LescopValue:
    """
    D''(1)/2 - D(1)/12 after symmetrizing and sign-normalizing D.

    Raises:
        NotSymmetrizable: If D has no symmetric normal form
    """
    normalized = symmetrize_and_normalize(poly)
    value_at_one = normalized.value_at_one()
    value = Fraction(normalized.second_derivative_at_one(), 2) - Fraction(value_at_one, 12)
    if value_at_one == 0:
        logger.warning(f"{normalized} vanishes at 1; the sign of the Lescop value is not determined")
    return LescopValue(value, value_at_one != 0)


def lescop_from_weights(weights: WeightVector) -> LescopValue:
    """sum_j L^(j) Delta^(j) for a sign-normalized weight vector."""
    value = sum((lescop_coefficient(j) * w for j, w in weights.weights.items()), Fraction(0))
    return LescopValue(value, weights.value_at_one() != 0)


def normalize_weights(weights: WeightVector) -> WeightVector:
    """
    Flip the global sign so that sum_j (-1)^(j-1) j Delta^(j) >= 0.

    When that sum is 0 the top Laurent coefficient (-1)^(J-1) Delta^(J), with
    J the largest index carrying a weight, is made positive, matching
    ``symmetrize_and_normalize``.
    """
    value = weights.value_at_one()
    if value > 0 or not weights.weights:
        return weights
    if value < 0:
        return -weights
    top = max(weights.weights)
    if (-1) ** (top - 1) * weights[top] < 0:
        return -weights
    return weights


def weights_from_alexander(poly: LaurentPolynomial) -> WeightVector:
    """
    Expand a symmetric polynomial in the basis [j]_{-t}.

    The polynomial is centered (no sign change); the top exponent n fixes
    Delta^(n+1) = (-1)^n c_n, which is subtracted before recursing.

    Raises:
        NotSymmetrizable: If the exponent span is odd
        NonIntegralWeight: If the residual leaves the span of the quantum integers
    """
    if poly.is_zero():
        return WeightVector(0, {})
    span = poly.valuation() + poly.degree()
    if span % 2:
        raise NotSymmetrizable(f"{poly} has odd exponent span and cannot be centered")
    remainder = poly.shift(-span // 2)
    weights = {}
    while not remainder.is_zero():
        n = remainder.degree()
        if n < 0:
            raise NonIntegralWeight(f"{poly} is not a combination of quantum integers (residual {remainder})")
        weight = remainder.leading_coefficient() * (-1) ** n
        weights[n + 1] = weight
        remainder = remainder - quantum_integer(n + 1) * weight
    genus = max(weights) - 1
    return WeightVector(genus, weights)
