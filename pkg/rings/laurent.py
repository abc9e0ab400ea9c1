"""
Single-variable Laurent polynomials over the integers.

Polynomials are immutable and store only their nonzero coefficients, sorted by
exponent. The variable is printed as ``t``.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Scalar = Union[int, Fraction]


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class LaurentPolynomial:
    """
    A Laurent polynomial in ``t`` with integer coefficients.

    >>> LaurentPolynomial({1: -1, 0: 3, -1: -1})
    LaurentPolynomial('-t + 3 - t^-1')
    """

    terms: Tuple[Tuple[int, int], ...]

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        merged: Dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for exponent, coefficient in items:
            merged[int(exponent)] = merged.get(int(exponent), 0) + int(coefficient)
        self.terms = tuple(sorted((e, c) for e, c in merged.items() if c != 0))

    # Constructors

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls()

    @classmethod
    def one(cls) -> LaurentPolynomial:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolynomial:
        return cls({exponent: coefficient})

    @classmethod
    def t(cls) -> LaurentPolynomial:
        return cls({1: 1})

    @classmethod
    def coerce(cls, other: Union[int, LaurentPolynomial]) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return cls({0: other})
        raise TypeError(f"Cannot coerce {other!r} to a LaurentPolynomial")

    # Inspection

    @property
    def coeffs(self) -> Dict[int, int]:
        """Exponent to coefficient map (a fresh dict, never containing zeros)."""
        return dict(self.terms)

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Highest exponent; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    def valuation(self) -> int:
        """Lowest exponent; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    def is_palindromic(self) -> bool:
        coeffs = self.coeffs
        return all(coeffs.get(-e, 0) == c for e, c in self.terms)

    def is_antipalindromic(self) -> bool:
        coeffs = self.coeffs
        return all(coeffs.get(-e, 0) == -c for e, c in self.terms)

    # Evaluation

    def evaluate(self, x: Scalar) -> Scalar:
        """Exact evaluation; negative exponents need an invertible ``x``."""
        total: Scalar = 0
        for e, c in self.terms:
            total += c * (Fraction(x) ** e if e < 0 else x ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def value_at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def second_derivative_at_one(self) -> int:
        # Termwise: d^2/dt^2 t^j = j(j-1) t^(j-2)
        return sum(e * (e - 1) * c for e, c in self.terms)

    # Substitutions

    def shift(self, amount: int) -> LaurentPolynomial:
        """Multiply by t^amount."""
        return LaurentPolynomial((e + amount, c) for e, c in self.terms)

    def bar(self) -> LaurentPolynomial:
        """Substitute t -> t^-1."""
        return LaurentPolynomial((-e, c) for e, c in self.terms)

    def at_minus_t(self) -> LaurentPolynomial:
        """Substitute t -> -t."""
        return LaurentPolynomial((e, -c if e % 2 else c) for e, c in self.terms)

    # Arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial((e, c * other) for e, c in self.terms)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        product: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                e, c = self.terms[0]
                return LaurentPolynomial({-e: c}) ** -n
            raise ValueError("Cannot invert a general Laurent polynomial.")
        if n == 0:
            return LaurentPolynomial.one()
        if n == 1:
            return self
        half = self ** (n // 2)
        return half * half if n % 2 == 0 else half * half * self

    # Formatting and serialization

    def fmt(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if parts:
                sign = " + " if c > 0 else " - "
            else:
                sign = "" if c > 0 else "-"
            power = "" if e == 0 else "t" if e == 1 else f"t^{e}"
            coefficient = str(abs(c)) if (abs(c) != 1 or e == 0) else ""
            parts.append(sign + coefficient + power)
        return "".join(parts)

    def __str__(self) -> str:
        return self.fmt()

    def __repr__(self) -> str:
        return f"LaurentPolynomial('{self.fmt()}')"

    def to_json(self) -> dict:
        return {"coeffs": {str(e): c for e, c in self.terms}}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPolynomial:
        return cls({int(e): int(c) for e, c in data["coeffs"].items()})
