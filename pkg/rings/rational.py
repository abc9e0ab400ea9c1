"""
Helpers for exact rationals (``fractions.Fraction``) and their residues.
"""

from fractions import Fraction
from typing import Union


def format_rational(value: Union[int, Fraction]) -> str:
    """Serialize as "a/b", or "a" for integers."""
    return str(Fraction(value))


def parse_rational(text: Union[str, int]) -> Fraction:
    return Fraction(text)


def rational_mod(value: Union[int, Fraction], p: int) -> int:
    """
    Reduce a rational mod p.

    Raises:
        ZeroDivisionError: If p divides the denominator
    """
    value = Fraction(value)
    if value.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {value} is not invertible mod {p}")
    return value.numerator * pow(value.denominator, -1, p) % p
