"""
Upper bounds on the cut number of a 3-manifold.

cut(M) <= 1 is certified either by a non-zero Lescop value (a manifold with
cut(M) >= 2 has lambda_L = 0) or, for mapping tori, by a non-zero level-5
weight sum Delta^(1)_5 + Delta^(4)_5. The printed closed formula in the
characteristic-polynomial coefficients is reported next to it but never
certifies: it is 1 on Sigma_2 x S^1, which has cut number 2.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Dict, List, Mapping, Optional

import numpy as np

from exterior.symplectic import SymplecticMatrix
from fn_tqft.cobordism import CobordismWord
from fn_tqft.functor import heegaard_invariant
from fn_tqft.weights import WeightVector, fundamental_weights
from lescop.invariants import LescopValue, lescop_from_alexander, lescop_from_weights, normalize_weights, \
    weights_from_alexander
from pmod.weights import alternating_weight, pmod_weights
from rings.laurent import LaurentPolynomial
from rings.quantum import symmetrize_and_normalize
from rings.rational import rational_mod
from utils.errors import InconsistentInput, MismatchError
from utils.rational_linalg import nullity_rational

logger = logging.getLogger(__name__)

P = 5


def sym_charpoly_coeffs(matrix: SymplecticMatrix) -> Dict[int, int]:
    """a_j with t^(-g) det(tI - S) = sum_j a_j t^j, for -g <= j <= g."""
    g = matrix.genus
    coeffs = {g - k: c for k, c in enumerate(matrix.charpoly())}
    for j in range(1, g + 1):
        assert coeffs[j] == coeffs[-j], f"characteristic polynomial of {matrix} is not palindromic at {j}"
    return coeffs


def delta5_literal(matrix: SymplecticMatrix) -> int:
    """sum_k a_(5k+2) + a_(5k-2) - a_(5k) mod 5."""
    coeffs = sym_charpoly_coeffs(matrix)
    total = 0
    for j, a in coeffs.items():
        if j % P == 0:
            total -= a
        elif j % P in (2, 3):
            total += a
    return total % P


def _level5_sum(residues: Mapping[int, int]) -> int:
    return (residues.get(1, 0) + residues.get(4, 0)) % P


def delta5_trace(matrix: SymplecticMatrix) -> int:
    """Delta^(1)_5 + Delta^(4)_5 of the mapping torus, by quotient traces."""
    return _level5_sum(pmod_weights(CobordismWord.mapping_class(matrix), P).residues)


def genus2_shortcut(matrix: SymplecticMatrix) -> bool:
    """True when trace(S^2) + 1 != trace(S)^2 mod 5."""
    square = matrix @ matrix
    return (square.trace() + 1 - matrix.trace() ** 2) % P != 0


def mapping_torus_b1(matrix: SymplecticMatrix) -> int:
    """1 + dim ker(S - I)."""
    shifted = np.asarray(matrix.as_array(), dtype=object) - np.eye(2 * matrix.genus, dtype=int).astype(object)
    return 1 + nullity_rational(shifted)


def _weight_residues(weights: WeightVector) -> Dict[int, int]:
    return {k: alternating_weight(weights.weights, k, P, weights.genus) for k in range(1, P)}


@dataclasses.dataclass(frozen=True)
class Level5Invariants:
    """tau_5 of the Heegaard gluing and lambda_L mod 5 of the mapping torus, by two routes."""

    genus: int
    tau5: int
    lescop: LescopValue
    lescop_mod5: int
    weights_mod5: int

    def to_json(self) -> dict:
        return {"g": self.genus, "tau5": self.tau5, "lescop": self.lescop.to_json(),
                "lescop_mod5": {"exact": self.lescop_mod5, "weights": self.weights_mod5}}


def _lescop_mod5(lescop: LescopValue, normalized: WeightVector) -> tuple:
    exact = rational_mod(lescop.value, P)
    via_weights = 2 * _level5_sum(_weight_residues(normalized)) % P
    if exact != via_weights:
        raise MismatchError(f"lambda_L = {lescop.value} is {exact} mod 5 but the weights give {via_weights}",
                            "lescop_mod5")
    return exact, via_weights


def level5_invariants(matrix: SymplecticMatrix) -> Level5Invariants:
    """
    Level-5 invariants attached to S.

    tau_5 is <Omega, S Omega> mod 5 for the Heegaard gluing by S; the Lescop
    value is that of the mapping torus of S, reduced mod 5 exactly and as
    2 (Delta^(1)_5 + Delta^(4)_5) of the sign-normalized weights.

    Raises:
        MismatchError: If the two reductions of lambda_L disagree
    """
    normalized = normalize_weights(fundamental_weights(CobordismWord.mapping_class(matrix)))
    lescop = lescop_from_weights(normalized)
    exact, via_weights = _lescop_mod5(lescop, normalized)
    return Level5Invariants(matrix.genus, heegaard_invariant(matrix) % P, lescop, exact, via_weights)


@dataclasses.dataclass
class CutReport:
    b1: int
    lescop: Optional[LescopValue]
    delta5_literal: Optional[int]
    delta5_trace: int
    lower: int
    upper: int
    lower_provenance: str
    upper_provenance: List[str]
    genus2_shortcut: Optional[bool] = None
    lescop_mod5: Optional[Dict[str, int]] = None
    tau5: Optional[int] = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise InconsistentInput(f"cut lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def cut(self) -> Optional[int]:
        """The cut number when the bounds meet."""
        return self.lower if self.lower == self.upper else None

    def to_json(self) -> dict:
        data = {"b1": self.b1, "lescop": self.lescop.to_json() if self.lescop else None,
                "delta5_literal": self.delta5_literal, "delta5_trace": self.delta5_trace,
                "bounds": {"lower": self.lower, "upper": self.upper},
                "provenance": {"lower": self.lower_provenance, "upper": self.upper_provenance},
                "cut": self.cut}
        if self.genus2_shortcut is not None:
            data["genus2_shortcut"] = self.genus2_shortcut
        if self.lescop_mod5 is not None:
            data["lescop_mod5"] = self.lescop_mod5
        if self.tau5 is not None:
            data["tau5"] = self.tau5
        return data


def _bounds(b1: int, lescop: LescopValue, trace: int, known_lower: Optional[int]) -> dict:
    lower, lower_provenance = (1, "b1") if b1 >= 1 else (0, "b1")
    if known_lower is not None and known_lower > lower:
        lower, lower_provenance = known_lower, "witness"
    upper, upper_provenance = b1, ["b1"]
    certificates = []
    if lescop.value != 0 and lescop.sign_certain:
        certificates.append("Lescop")
    if trace:
        certificates.append("delta5")
    if certificates and b1 >= 1:
        upper, upper_provenance = 1, certificates
    if lower > upper:
        raise InconsistentInput(f"witnessed cut >= {lower} contradicts the certificates {upper_provenance}")
    return {"lower": lower, "upper": upper, "lower_provenance": lower_provenance,
            "upper_provenance": upper_provenance}


def cut_report(monodromy: Optional[SymplecticMatrix] = None, alexander: Optional[LaurentPolynomial] = None,
               b1: Optional[int] = None, known_lower: Optional[int] = None) -> CutReport:
    """
    Bounds on cut(M) for a mapping torus T_S, or for a manifold given by its
    Alexander polynomial and first Betti number.

    ``known_lower`` is a caller-supplied free-quotient rank; it is checked
    against the certificates but never computed.

    Raises:
        InconsistentInput: If neither or both inputs are given, b_1 disagrees
            with the monodromy, b_1 >= 2 with D(1) != 0, or the witnessed
            lower bound exceeds a certificate
    """
    if (monodromy is None) == (alexander is None):
        raise InconsistentInput("give exactly one of a monodromy or an Alexander polynomial")
    if b1 is not None and b1 < 0:
        raise InconsistentInput(f"b1 must be non-negative, got {b1}")

    if monodromy is not None:
        computed = mapping_torus_b1(monodromy)
        if b1 is not None and b1 != computed:
            raise InconsistentInput(f"b1 = {b1} given but the mapping torus of {monodromy} has b1 = {computed}")
        level5 = level5_invariants(monodromy)
        trace = delta5_trace(monodromy)
        report = CutReport(b1=computed, lescop=level5.lescop, delta5_literal=delta5_literal(monodromy),
                           delta5_trace=trace,
                           genus2_shortcut=genus2_shortcut(monodromy) if monodromy.genus == 2 else None,
                           lescop_mod5={"exact": level5.lescop_mod5, "weights": level5.weights_mod5},
                           tau5=level5.tau5, **_bounds(computed, level5.lescop, trace, known_lower))
    else:
        if b1 is None:
            raise InconsistentInput("an Alexander polynomial needs b1")
        normalized_poly = symmetrize_and_normalize(alexander)
        if b1 >= 2 and normalized_poly.value_at_one() != 0:
            raise InconsistentInput(f"b1 = {b1} requires D(1) = 0, got {normalized_poly.value_at_one()}")
        lescop = lescop_from_alexander(alexander)
        weights = normalize_weights(weights_from_alexander(normalized_poly))
        exact, via_weights = _lescop_mod5(lescop, weights)
        trace = _level5_sum(_weight_residues(weights))
        report = CutReport(b1=b1, lescop=lescop, delta5_literal=None, delta5_trace=trace,
                           lescop_mod5={"exact": exact, "weights": via_weights},
                           **_bounds(b1, lescop, trace, known_lower))

    if report.delta5_literal is not None and report.delta5_literal != report.delta5_trace:
        logger.info(f"delta5 literal {report.delta5_literal} differs from the trace form {report.delta5_trace}")
    logger.debug(f"cut bounds [{report.lower}, {report.upper}] from {report.upper_provenance}")
    return report
