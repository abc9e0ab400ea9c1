"""
Sparse exterior algebra of H_1 of a closed genus-g surface.

A monomial is a 2g-bit mask: bit i (i < g) is a_{i+1}, bit g + i is b_{i+1}.
Factors of a monomial are always taken in the order a_1 < ... < a_g < b_1 <
... < b_g, and every sign below comes from sorting into that order. The
monomial basis is orthonormal for ``inner``.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from utils.errors import GenusMismatch

Coefficient = Union[int, Fraction]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_to_list(mask: int) -> List[int]:
    bits = []
    i = 0
    while mask:
        if mask & 1:
            bits.append(i)
        mask >>= 1
        i += 1
    return bits


def list_to_mask(bits: Iterable[int]) -> int:
    mask = 0
    for i in bits:
        mask |= 1 << i
    return mask


@lru_cache(maxsize=1 << 18)
def reorder_sign(left: int, right: int) -> int:
    """Sign of sorting the concatenated factors of two disjoint monomials."""
    swaps = 0
    left >>= 1
    while left:
        swaps += popcount(left & right)
        left >>= 1
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def monomials(genus: int, degree: int) -> Tuple[int, ...]:
    """All degree-``degree`` masks in genus ``genus``, ascending."""
    if degree < 0 or degree > 2 * genus:
        return ()
    return tuple(sorted(list_to_mask(c) for c in combinations(range(2 * genus), degree)))


def _normalize(value: Coefficient) -> Coefficient:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


@dataclasses.dataclass(frozen=True)
class HomologyClass:
    """An element of H_1(Sigma_g; Z) in (a_1..a_g, b_1..b_g) coordinates."""

    genus: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def a(cls, genus: int, i: int) -> HomologyClass:
        """The class a_i (1-based)."""
        coords = [0] * (2 * genus)
        coords[i - 1] = 1
        return cls(genus, tuple(coords))

    @classmethod
    def b(cls, genus: int, i: int) -> HomologyClass:
        """The class b_i (1-based)."""
        coords = [0] * (2 * genus)
        coords[genus + i - 1] = 1
        return cls(genus, tuple(coords))

    @classmethod
    def zero(cls, genus: int) -> HomologyClass:
        return cls(genus, (0,) * (2 * genus))

    def _check(self, other: HomologyClass):
        if self.genus != other.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: HomologyClass) -> HomologyClass:
        self._check(other)
        return HomologyClass(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        self._check(other)
        return HomologyClass(self.genus, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> HomologyClass:
        return HomologyClass(self.genus, tuple(-x for x in self.coords))

    def __rmul__(self, scalar: int) -> HomologyClass:
        return HomologyClass(self.genus, tuple(scalar * x for x in self.coords))

    def skew(self, other: HomologyClass) -> int:
        """Intersection form with (a_i, b_i) = 1 and (b_i, a_i) = -1."""
        self._check(other)
        g = self.genus
        return sum(self.coords[i] * other.coords[g + i] - self.coords[g + i] * other.coords[i]
                   for i in range(g))

    def to_multivector(self) -> MultiVector:
        return MultiVector(self.genus, {1 << i: c for i, c in enumerate(self.coords) if c})

    def to_json(self) -> List[int]:
        return list(self.coords)

    def __str__(self) -> str:
        g = self.genus
        names = [f"a{i + 1}" for i in range(g)] + [f"b{i + 1}" for i in range(g)]
        parts = [f"{c}*{n}" for c, n in zip(self.coords, names) if c]
        return " + ".join(parts) if parts else "0"


class MultiVector:
    """
    Sparse element of the exterior algebra of H_1(Sigma_g).

    Coefficients are integers, or exact rationals for vectors produced by
    rational projections; zero coefficients are never stored.
    """

    __slots__ = ("genus", "_terms")

    def __init__(self, genus: int, terms: Optional[Mapping[int, Coefficient]] = None):
        self.genus = genus
        limit = 1 << (2 * genus)
        cleaned: Dict[int, Coefficient] = {}
        for mask, coefficient in (terms or {}).items():
            mask = int(mask)
            if not 0 <= mask < limit:
                raise ValueError(f"mask {mask} out of range for genus {genus}")
            if coefficient:
                cleaned[mask] = _normalize(coefficient)
        self._terms = cleaned

    @classmethod
    def _trusted(cls, genus: int, terms: Dict[int, Coefficient]) -> MultiVector:
        vector = cls.__new__(cls)
        vector.genus = genus
        vector._terms = {m: _normalize(c) for m, c in terms.items() if c}
        return vector

    # Constructors

    @classmethod
    def zero(cls, genus: int) -> MultiVector:
        return cls(genus)

    @classmethod
    def one(cls, genus: int) -> MultiVector:
        return cls(genus, {0: 1})

    @classmethod
    def basis(cls, genus: int, mask: int, coefficient: Coefficient = 1) -> MultiVector:
        return cls(genus, {mask: coefficient})

    @classmethod
    def a(cls, genus: int, i: int) -> MultiVector:
        return cls(genus, {1 << (i - 1): 1})

    @classmethod
    def b(cls, genus: int, i: int) -> MultiVector:
        return cls(genus, {1 << (genus + i - 1): 1})

    @classmethod
    def omega(cls, genus: int) -> MultiVector:
        """The symplectic form a_1^b_1 + ... + a_g^b_g."""
        return cls(genus, {(1 << i) | (1 << (genus + i)): 1 for i in range(genus)})

    @classmethod
    def handlebody_state(cls, genus: int) -> MultiVector:
        """Omega_g = a_1 ^ ... ^ a_g."""
        return cls(genus, {(1 << genus) - 1: 1})

    @classmethod
    def volume(cls, genus: int) -> MultiVector:
        return cls(genus, {(1 << (2 * genus)) - 1: 1})

    @classmethod
    def from_homology(cls, x: HomologyClass) -> MultiVector:
        return x.to_multivector()

    # Inspection

    @property
    def terms(self) -> Mapping[int, Coefficient]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> List[int]:
        return sorted({popcount(m) for m in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Degree of a nonzero homogeneous vector, None for 0."""
        degrees = self.degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"vector is not homogeneous (degrees {degrees})")
        return degrees[0]

    def degree_part(self, degree: int) -> MultiVector:
        return MultiVector._trusted(self.genus, {m: c for m, c in self._terms.items() if popcount(m) == degree})

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def coefficient(self, mask: int) -> Coefficient:
        return self._terms.get(mask, 0)

    # Arithmetic

    def _check(self, other: MultiVector):
        if self.genus != other.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: MultiVector) -> MultiVector:
        if not isinstance(other, MultiVector):
            return NotImplemented
        self._check(other)
        result = dict(self._terms)
        for m, c in other._terms.items():
            result[m] = result.get(m, 0) + c
        return MultiVector._trusted(self.genus, result)

    def __sub__(self, other: MultiVector) -> MultiVector:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> MultiVector:
        return MultiVector._trusted(self.genus, {m: -c for m, c in self._terms.items()})

    def __mul__(self, scalar: Coefficient) -> MultiVector:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return MultiVector._trusted(self.genus, {m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.genus == other.genus and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.genus, frozenset(self._terms.items())))

    # Formatting and serialization

    def monomial_name(self, mask: int) -> str:
        g = self.genus
        names = [f"a{i + 1}" if i < g else f"b{i - g + 1}" for i in mask_to_list(mask)]
        return "^".join(names) if names else "1"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{self.monomial_name(m)}" for m, c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"MultiVector(g={self.genus}, {self})"

    def to_json(self) -> dict:
        return {"g": self.genus, "terms": {str(m): c if isinstance(c, int) else str(c)
                                           for m, c in sorted(self._terms.items())}}

    @classmethod
    def from_json(cls, data: Mapping) -> MultiVector:
        return cls(int(data["g"]), {int(m): Fraction(c) for m, c in data["terms"].items()})


def wedge(x: MultiVector, y: MultiVector) -> MultiVector:
    """Exterior product with signs from sorting into basis order."""
    x._check(y)
    result: Dict[int, Coefficient] = {}
    for m1, c1 in x._terms.items():
        for m2, c2 in y._terms.items():
            if m1 & m2:
                continue
            mask = m1 | m2
            result[mask] = result.get(mask, 0) + reorder_sign(m1, m2) * c1 * c2
    return MultiVector._trusted(x.genus, result)


def inner(x: MultiVector, y: MultiVector) -> Coefficient:
    """Inner product making the monomial basis orthonormal."""
    x._check(y)
    if len(x._terms) > len(y._terms):
        x, y = y, x
    return _normalize(sum(c * y._terms.get(m, 0) for m, c in x._terms.items()))


def _jmap_mask(mask: int, genus: int) -> Tuple[int, int]:
    a_part = mask & ((1 << genus) - 1)
    b_part = mask >> genus
    n_a, n_b = popcount(a_part), popcount(b_part)
    sign = -1 if (n_b + n_a * n_b) & 1 else 1
    return (a_part << genus) | b_part, sign


def jmap(x: MultiVector) -> MultiVector:
    """Multiplicative extension of J a_i = b_i, J b_i = -a_i."""
    result = {}
    for m, c in x._terms.items():
        image, sign = _jmap_mask(m, x.genus)
        result[image] = sign * c
    return MultiVector._trusted(x.genus, result)


def adjoint_wedge(x: MultiVector, v: MultiVector) -> MultiVector:
    """The inner-product adjoint of wedging with ``x``, applied to ``v``."""
    x._check(v)
    result: Dict[int, Coefficient] = {}
    for m, c in x._terms.items():
        for n, d in v._terms.items():
            if m & n != m:
                continue
            rest = n ^ m
            result[rest] = result.get(rest, 0) + reorder_sign(m, rest) * c * d
    return MultiVector._trusted(x.genus, result)


def contract(x: MultiVector, v: MultiVector) -> MultiVector:
    """mu(x).v: the adjoint of wedging with J(x)."""
    x._check(v)
    return adjoint_wedge(jmap(x), v)


def _pairing_det(left: int, right: int, genus: int) -> int:
    """Determinant of skew pairings between the factors of two monomials."""
    if popcount(left) != popcount(right):
        return 0
    factors = mask_to_list(left)
    targets = mask_to_list(right)
    positions = {bit: k for k, bit in enumerate(targets)}
    permutation = []
    value = 1
    for bit in factors:
        partner = bit + genus if bit < genus else bit - genus
        if partner not in positions:
            return 0
        permutation.append(positions[partner])
        if bit >= genus:
            value = -value
    inversions = sum(1 for i in range(len(permutation)) for j in range(i + 1, len(permutation))
                     if permutation[i] > permutation[j])
    return -value if inversions & 1 else value


def skew_pairing(x: MultiVector, y: MultiVector) -> Coefficient:
    """Degree-wise extension of the skew form: det of pairwise pairings on decomposables."""
    x._check(y)
    total: Coefficient = 0
    for m, c in x._terms.items():
        for n, d in y._terms.items():
            det = _pairing_det(m, n, x.genus)
            if det:
                total += det * c * d
    return _normalize(total)


def combine(genus: int, pieces: Sequence[Tuple[Coefficient, MultiVector]]) -> MultiVector:
    """Linear combination sum c_i v_i."""
    result: Dict[int, Coefficient] = {}
    for coefficient, vector in pieces:
        if not coefficient:
            continue
        for m, c in vector._terms.items():
            result[m] = result.get(m, 0) + coefficient * c
    return MultiVector._trusted(genus, result)
