"""
Truncated polynomial rings F_p[y]/y^m.

With m = p - 1 this models F_p[zeta_p] through zeta_p = 1 + y; with m = 2 it
is the dual-number ring used for y-order perturbations.
"""

from __future__ import annotations

import dataclasses
from typing import Mapping, Sequence, Union


@dataclasses.dataclass(frozen=True)
class TruncatedPoly:
    """An element c_0 + c_1 y + ... + c_{m-1} y^{m-1} with residues mod p."""

    p: int
    m: int
    coeffs: tuple

    def __init__(self, p: int, m: int, coeffs: Sequence[int] = ()):
        if p < 2:
            raise ValueError(f"modulus must be a prime, got {p}")
        if m < 1:
            raise ValueError(f"truncation must be positive, got {m}")
        padded = [int(c) % p for c in list(coeffs)[:m]]
        padded += [0] * (m - len(padded))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(padded))

    @classmethod
    def constant(cls, p: int, m: int, value: int) -> TruncatedPoly:
        return cls(p, m, [value])

    @classmethod
    def y(cls, p: int, m: int) -> TruncatedPoly:
        return cls(p, m, [0, 1])

    def _check(self, other: TruncatedPoly):
        if (self.p, self.m) != (other.p, other.m):
            raise ValueError(f"ring mismatch: F_{self.p}[y]/y^{self.m} vs F_{other.p}[y]/y^{other.m}")

    def _lift(self, other: Union[int, TruncatedPoly]) -> TruncatedPoly:
        if isinstance(other, int):
            return TruncatedPoly.constant(self.p, self.m, other)
        self._check(other)
        return other

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, (int, TruncatedPoly)):
            return NotImplemented
        other = self._lift(other)
        return TruncatedPoly(self.p, self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> TruncatedPoly:
        return TruncatedPoly(self.p, self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (int, TruncatedPoly)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedPoly(self.p, self.m, [c * other for c in self.coeffs])
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check(other)
        product = [0] * self.m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.m - i):
                product[i + j] += a * other.coeffs[j]
        return TruncatedPoly(self.p, self.m, product)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TruncatedPoly:
        if n < 0:
            return self.inverse() ** -n
        result = TruncatedPoly.constant(self.p, self.m, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> TruncatedPoly:
        """Inverse of a unit (constant term nonzero mod p)."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("not a unit in the truncated ring")
        # u = c0 (1 + n) with n nilpotent: u^-1 = c0^-1 sum (-n)^i
        c0_inv = pow(c0, -1, self.p)
        nilpotent = self * c0_inv - 1
        result = TruncatedPoly.constant(self.p, self.m, 1)
        power = TruncatedPoly.constant(self.p, self.m, 1)
        for _ in range(1, self.m):
            power = power * (-nilpotent)
            result = result + power
        return result * c0_inv

    def __str__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}y" if i == 1 else f"{c}y^{i}" for i, c in enumerate(self.coeffs)]
        return " + ".join(terms) + f" (mod {self.p}, y^{self.m})"

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> TruncatedPoly:
        return cls(int(data["p"]), int(data["m"]), [int(c) for c in data["coeffs"]])
