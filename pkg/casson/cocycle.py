"""
The Casson-Morita cocycle on U = ^3 H / (omega ^ H) and Morita's s-form.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Mapping, Optional, Tuple

from casson.theta import psi_pair
from exterior.multivector import MultiVector, monomials, skew_pairing
from exterior.symplectic import SymplecticMatrix, sp_action
from lefschetz.decomposition import decompose
from utils.errors import GenusMismatch

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class UClass:
    """
    A class in U, stored by its primitive representative.

    The representative is the level-0 term of the Lefschetz decomposition,
    so two degree-3 forms define the same class exactly when the stored
    vectors are equal.
    """

    representative: MultiVector

    def __post_init__(self):
        rep = self.representative
        if rep.genus < 3:
            raise ValueError(f"U is defined for genus >= 3, got {rep.genus}")
        if not rep.is_zero() and rep.degree != 3:
            raise ValueError(f"U classes are represented by 3-forms, got degree {rep.degree}")

    @classmethod
    def from_form(cls, x: MultiVector) -> UClass:
        if x.degrees() not in ([], [3]):
            raise ValueError(f"U classes are represented by 3-forms, got degrees {x.degrees()}")
        primitive = MultiVector.zero(x.genus)
        for term in decompose(x):
            if term.level == 0:
                primitive = term.primitive
        return cls(primitive)

    @property
    def genus(self) -> int:
        return self.representative.genus

    def __add__(self, other: UClass) -> UClass:
        return UClass(self.representative + other.representative)

    def __neg__(self) -> UClass:
        return UClass(-self.representative)

    def __mul__(self, scalar: int) -> UClass:
        return UClass(self.representative * scalar)

    __rmul__ = __mul__

    def transform(self, matrix: SymplecticMatrix) -> UClass:
        # the Sp action commutes with F, so primitives map to primitives
        return UClass(sp_action(matrix, self.representative))

    def to_json(self) -> dict:
        return self.representative.to_json()

    @classmethod
    def from_json(cls, data: Mapping) -> UClass:
        return cls.from_form(MultiVector.from_json(data))


def casson_cocycle(u1: UClass, u2: UClass) -> int:
    """-<Omega_g, nu(u1) mu(u2) Omega_g> on the stored representatives."""
    if u1.genus != u2.genus:
        raise GenusMismatch(f"genus {u1.genus} vs {u2.genus}")
    value = -psi_pair(u1.representative, u2.representative)
    return int(value) if Fraction(value).denominator == 1 else value


def s_form(alpha: MultiVector, beta: MultiVector) -> int:
    """(alpha, Pi_L beta) with Pi_L keeping only the monomials in a_1..a_g."""
    g = beta.genus
    lagrangian = (1 << g) - 1
    projected = MultiVector(g, {m: c for m, c in beta.terms.items() if not m & ~lagrangian})
    return skew_pairing(alpha, projected)


def morita_eta(h: int) -> Fraction:
    """Morita's eta on the twist along a genus-h bounding curve: h(h-1)/6."""
    if h < 0:
        raise ValueError(f"subsurface genus must be non-negative, got {h}")
    return Fraction(h * (h - 1), 6)


CONVENTIONS = {
    "s(x,y)": lambda s_xy, s_yx: s_xy,
    "-s(x,y)": lambda s_xy, s_yx: -s_xy,
    "s(y,x)": lambda s_xy, s_yx: s_yx,
    "-s(y,x)": lambda s_xy, s_yx: -s_yx,
}


@dataclasses.dataclass
class CocycleDictionary:
    """Outcome of comparing the cocycle with each sign/slot convention of s."""

    genus: int
    pairs_checked: int = 0
    agrees: Dict[str, bool] = dataclasses.field(default_factory=lambda: {name: True for name in CONVENTIONS})
    counterexamples: Dict[str, Tuple[str, str, int, int]] = dataclasses.field(default_factory=dict)

    @property
    def matching(self) -> List[str]:
        return [name for name, ok in self.agrees.items() if ok]

    def to_json(self) -> dict:
        return {"g": self.genus, "pairs_checked": self.pairs_checked, "matching": self.matching,
                "counterexamples": {name: {"x": x, "y": y, "cocycle": c, "convention": v}
                                    for name, (x, y, c, v) in self.counterexamples.items()}}


def cocycle_s_dictionary(genus: int, limit: Optional[int] = None) -> CocycleDictionary:
    """
    Compare casson_cocycle(x, y) with s on all pairs of degree-3 monomials.

    Args:
        genus: Genus >= 3
        limit: Optional cap on the number of pairs examined

    Returns:
        CocycleDictionary: which conventions hold on every pair, with the
        first counterexample for each convention that fails
    """
    masks = monomials(genus, 3)
    forms = [MultiVector.basis(genus, m) for m in masks]
    classes = [UClass.from_form(x) for x in forms]
    result = CocycleDictionary(genus)
    for (i, x), (k, y) in product(enumerate(forms), repeat=2):
        if limit is not None and result.pairs_checked >= limit:
            break
        cocycle = casson_cocycle(classes[i], classes[k])
        s_xy, s_yx = s_form(x, y), s_form(y, x)
        result.pairs_checked += 1
        for name, convention in CONVENTIONS.items():
            value = convention(s_xy, s_yx)
            if value != cocycle and result.agrees[name]:
                result.agrees[name] = False
                result.counterexamples[name] = (str(x), str(y), cocycle, value)
    logger.info(f"cocycle dictionary at genus {genus}: {result.pairs_checked} pairs, matching {result.matching}")
    return result
