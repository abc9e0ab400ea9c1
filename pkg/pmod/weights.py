"""
p-modular torsion weights and the mod-p Alexander and Lescop formulas.

The weight of index k (0 < k < p) is the trace of a closed word on the
quotient of V^(k)_p. The resolution makes it the alternating sum of the
integral weights at c_0, c_1, ... reduced mod p; both routes are computed.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Dict, Mapping, Tuple

from fn_tqft.cobordism import CobordismWord
from fn_tqft.weights import WeightVector, alexander_trace, component_matrix, fundamental_weights
from lescop.invariants import lescop_coefficient
from pmod.components import modular_component, require_prime
from pmod.resolution import resolution_indices
from rings.quantum import cyclotomic_reduce, quantum_integer
from rings.rational import rational_mod
from rings.truncated import TruncatedPoly
from utils.errors import MismatchError, PreconditionError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ModularWeights:
    """Residues of the weights 1..p-1 with the integral weights they came from."""

    p: int
    genus: int
    residues: Dict[int, int]
    integral: WeightVector

    def __getitem__(self, k: int) -> int:
        return self.residues.get(k, 0)

    def as_list(self) -> list:
        return [self[k] for k in range(1, self.p)]

    def to_json(self) -> dict:
        return {"p": self.p, "g": self.genus, "residues": {str(k): v for k, v in self.residues.items()},
                "integral": self.integral.to_json()}


def alternating_weight(weights: Mapping[int, int], k: int, p: int, genus: int) -> int:
    """sum_i (-1)^i Delta^(c_i) mod p."""
    return sum((-1) ** i * weights.get(c, 0) for i, c in enumerate(resolution_indices(k, p, genus + 1))) % p


def quotient_weight(word: CobordismWord, k: int, p: int) -> int:
    """Trace of a closed word on the quotient of V^(k)_p."""
    g = word.start_genus
    if k > g + 1:
        return 0
    component = modular_component(g, k, p)
    return component.quotient_trace(component_matrix(word, k))


def pmod_weights(word: CobordismWord, p: int) -> ModularWeights:
    """
    p-modular weights of a closed word, by quotient traces and by the
    alternating sum of integral weights.

    Raises:
        InvalidWord: If the word is not closed
        MismatchError: If the two routes disagree for some k
    """
    require_prime(p)
    word.require_closed()
    g = word.start_genus
    integral = fundamental_weights(word)
    residues = {}
    for k in range(1, p):
        traced = quotient_weight(word, k, p)
        expected = alternating_weight(integral.weights, k, p, g)
        if traced != expected:
            raise MismatchError(f"quotient trace {traced} vs alternating sum {expected} mod {p} for {word}",
                                f"k={k}")
        residues[k] = traced
    logger.debug(f"{p}-modular weights of {word}: {residues}")
    return ModularWeights(p, g, residues, integral)


def modular_alexander(residues: Mapping[int, int], p: int) -> TruncatedPoly:
    """sum_k [k]_{-zeta_p} w_k in F_p[y]/y^(p-1) with zeta_p = 1 + y."""
    total = TruncatedPoly(p, p - 1)
    for k in range(1, p):
        w = residues.get(k, 0)
        if w:
            total = total + cyclotomic_reduce(quantum_integer(k), p) * w
    return total


@dataclasses.dataclass(frozen=True)
class ModularAlexander:
    """The mod-p Alexander polynomial by the weight route and by direct reduction."""

    weights_route: TruncatedPoly
    direct: TruncatedPoly

    def to_json(self) -> dict:
        return {"weights_route": self.weights_route.to_json(), "direct": self.direct.to_json()}


def pmod_alexander(word: CobordismWord, p: int) -> ModularAlexander:
    """
    Reduce the Alexander trace of a closed word into F_p[zeta_p] two ways.

    Raises:
        MismatchError: If the weight expansion and the direct reduction differ
    """
    weights = pmod_weights(word, p)
    route = modular_alexander(weights.residues, p)
    direct = cyclotomic_reduce(alexander_trace(word), p)
    if route != direct:
        raise MismatchError(f"mod-{p} Alexander polynomial of {word}: {route} vs {direct}", "pmod_alexander")
    return ModularAlexander(route, direct)


def lescop_coefficient_mod(j: int, p: int) -> int:
    return rational_mod(lescop_coefficient(j), p)


def lescop_table(p: int) -> Tuple[int, ...]:
    """
    Reductions of L^(1), ..., L^(p-1).

    The reductions satisfy L(p - j) = L(j) and L(p + j) = -L(j), so along a
    resolution L(c_i) = (-1)^i L(k).
    """
    if p < 5:
        raise PreconditionError(f"1/12 needs p >= 5, got {p}")
    require_prime(p)
    table = tuple(lescop_coefficient_mod(j, p) for j in range(1, p))
    for j in range(1, p):
        assert table[p - j - 1] == table[j - 1], f"reflection fails at j={j} mod {p}"
        assert lescop_coefficient_mod(p + j, p) == -table[j - 1] % p, f"shift fails at j={j} mod {p}"
    return table


def lescop_mod_p(weights: Mapping[int, int], p: int) -> int:
    """sum_k L^(k) w_k mod p for p-modular weights w_1..w_(p-1)."""
    table = lescop_table(p)
    return sum(table[k - 1] * weights.get(k, 0) for k in range(1, p)) % p
