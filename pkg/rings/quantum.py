"""
Quantum integers, symmetrization of Alexander-type polynomials and reduction
to the truncated cyclotomic ring.
"""

import logging
from enum import Enum

from rings.laurent import LaurentPolynomial
from rings.truncated import TruncatedPoly
from utils.errors import NotSymmetrizable

logger = logging.getLogger(__name__)


class SignVariant(Enum):
    """Substitution used for the quantum parameter."""
    Q = "q"              # q = t
    MINUS_Q = "-q"       # q = -t


def quantum_integer(n: int, sign_variant: SignVariant = SignVariant.MINUS_Q) -> LaurentPolynomial:
    """
    Return [n]_q = (q^n - q^-n) / (q - q^-1) as a Laurent polynomial in t.

    Args:
        n: Positive integer
        sign_variant: ``Q`` substitutes q = t, ``MINUS_Q`` substitutes q = -t

    Returns:
        LaurentPolynomial: sum of q^(n-1-2k) for k = 0..n-1
    """
    if n < 1:
        raise ValueError(f"quantum integers are defined for n >= 1, got {n}")
    sign = -1 if (sign_variant is SignVariant.MINUS_Q and (n - 1) % 2) else 1
    return LaurentPolynomial({n - 1 - 2 * k: sign for k in range(n)})


def symmetrize_and_normalize(poly: LaurentPolynomial) -> LaurentPolynomial:
    """
    Shift and sign a polynomial into its symmetric normal form.

    The result is palindromic with nonnegative value at t = 1; when that value
    is 0 the top coefficient is made positive.

    Raises:
        NotSymmetrizable: If no shift makes the polynomial palindromic
    """
    if poly.is_zero():
        return poly
    span = poly.valuation() + poly.degree()
    if span % 2:
        raise NotSymmetrizable(f"{poly} has odd exponent span and cannot be centered")
    centered = poly.shift(-span // 2)
    if not centered.is_palindromic():
        if centered.is_antipalindromic():
            raise NotSymmetrizable(f"{poly} is anti-palindromic; no sign makes it palindromic")
        raise NotSymmetrizable(f"{poly} is not palindromic after centering")

    value = centered.value_at_one()
    if value < 0 or (value == 0 and centered.leading_coefficient() < 0):
        centered = -centered
    if value == 0:
        logger.debug(f"{centered} vanishes at 1; sign fixed by top coefficient")
    return centered


def cyclotomic_reduce(poly: LaurentPolynomial, prime: int) -> TruncatedPoly:
    """
    Map t -> 1 + y into F_p[y]/y^(p-1).

    Args:
        poly: Integer Laurent polynomial
        prime: Prime p >= 3

    Returns:
        TruncatedPoly: image of ``poly`` with truncation p - 1
    """
    if prime < 3:
        raise ValueError(f"cyclotomic reduction needs p >= 3, got {prime}")
    m = prime - 1
    zeta = TruncatedPoly(prime, m, [1, 1])
    zeta_inv = TruncatedPoly(prime, m, [(-1) ** i for i in range(m)])
    result = TruncatedPoly(prime, m)
    for exponent, coefficient in poly.terms:
        base = zeta if exponent >= 0 else zeta_inv
        result = result + (base ** abs(exponent)) * coefficient
    return result
