"""
Two-row Specht modules as zero-weight spaces.

In genus n the forms of zero weight are spanned by the products omega_S of
a_i ^ b_i over subsets S of the handles. The primitive ones of degree
n + 1 - c form the Specht module of the partition
[(n + c - 1)/2, (n - c + 1)/2], with S_n permuting the handles.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np

from exterior.multivector import MultiVector, inner
from exterior.symplectic import SymplecticMatrix, sp_action
from lefschetz.components import LefschetzComponent, compress
from lefschetz.sl2 import F
from models.reports import Report
from pmod.components import ModularComponent, reduce_component, require_prime
from pmod.resolution import resolution_indices
from utils.errors import ExactnessFailure, NonIntegralTrace, PreconditionError
from utils.lattice import integer_kernel
from utils.rational_linalg import is_integral, trace

logger = logging.getLogger(__name__)


def two_row_partition(n: int, c: int) -> Optional[Tuple[int, int]]:
    """[(n + c - 1)/2, (n - c + 1)/2], or None when the second row would be negative."""
    if (n + c - 1) % 2:
        raise PreconditionError(f"index {c} has the wrong parity for n={n}")
    second = (n - c + 1) // 2
    if second < 0:
        return None
    return n - second, second


def specht_dimension(n: int, second: int) -> int:
    """C(n, l2) - C(n, l2 - 1)."""
    return comb(n, second) - (comb(n, second - 1) if second >= 1 else 0)


def _omega_mask(n: int, subset: Sequence[int]) -> int:
    mask = 0
    for i in subset:
        mask |= (1 << i) | (1 << (n + i))
    return mask


@functools.lru_cache(maxsize=None)
def zero_weight_component(n: int, c: int) -> LefschetzComponent:
    """Saturated basis of the zero-weight part of V^(c)(Sigma_n)."""
    partition = two_row_partition(n, c)
    if partition is None:
        return LefschetzComponent(n, c, (), np.zeros((0, 0), dtype=object))
    size = partition[1]
    sources = [_omega_mask(n, s) for s in combinations(range(n), size)]
    images = [dict(F(MultiVector.basis(n, m)).terms) for m in sources]
    basis = tuple(MultiVector(n, {sources[i]: v for i, v in vector.items()}) for vector in integer_kernel(images))
    gram = np.array([[inner(x, y) for y in basis] for x in basis], dtype=object).reshape(len(basis), len(basis))
    logger.debug(f"zero-weight part of V^({c})(Sigma_{n}): {len(sources)} subsets, dim {len(basis)}")
    return LefschetzComponent(n, c, basis, gram)


def handle_permutation(permutation: Sequence[int]) -> SymplecticMatrix:
    """The symplectic matrix sending a_i, b_i to a_sigma(i), b_sigma(i)."""
    n = len(permutation)
    if sorted(permutation) != list(range(n)):
        raise PreconditionError(f"{list(permutation)} is not a permutation of 0..{n - 1}")
    block = np.zeros((n, n), dtype=object)
    for i, image in enumerate(permutation):
        block[image, i] = 1
    return SymplecticMatrix.block_diagonal(block)


def permutation_action(component: LefschetzComponent, permutation: Sequence[int]) -> np.ndarray:
    """Integral matrix of sigma on a zero-weight component."""
    matrix = handle_permutation(permutation)
    action = compress(component, component, lambda x: sp_action(matrix, x))
    if not is_integral(action):
        raise NonIntegralTrace(f"permutation {list(permutation)} acts non-integrally on V^({component.index})")
    return action


def character(n: int, c: int, permutation: Sequence[int]) -> int:
    """Integral trace of sigma on the Specht module of index c."""
    component = zero_weight_component(n, c)
    if component.is_empty():
        return 0
    return int(trace(permutation_action(component, permutation)))


def character_formula(n: int, c: int, permutation: Sequence[int]) -> int:
    """Fixed l2-subsets minus fixed (l2 - 1)-subsets of sigma."""
    partition = two_row_partition(n, c)
    if partition is None:
        return 0

    def fixed(size: int) -> int:
        if size < 0:
            return 0
        return sum(1 for s in combinations(range(n), size) if {permutation[i] for i in s} == set(s))

    return fixed(partition[1]) - fixed(partition[1] - 1)


@dataclasses.dataclass(frozen=True)
class SpechtData:
    """A Specht module of index c with its reduction mod p."""

    n: int
    c: int
    partition: Tuple[int, int]
    modular: ModularComponent

    @property
    def dimension(self) -> int:
        return self.modular.dimension

    def to_json(self) -> dict:
        return {"n": self.n, "c": self.c, "partition": list(self.partition), "dimension": self.dimension,
                "p": self.modular.p, "irreducible_dimension": self.modular.quotient_dimension}


def specht_data(n: int, c: int, p: int) -> Optional[SpechtData]:
    partition = two_row_partition(n, c)
    if partition is None:
        return None
    return SpechtData(n, c, partition, reduce_component(zero_weight_component(n, c), p))


def specht_check(n: int, k: int, p: int, permutations: Sequence[Sequence[int]] = (),
                 strict: bool = True) -> Report:
    """
    Check the dimension and character identities of the modular reduction.

    The irreducible module of index k is the quotient of the Specht module by
    the null space of its form; its dimension and the traces of the sampled
    permutations must equal the alternating sums over c_0, c_1, ... .

    Raises:
        PreconditionError: If k != n + 1 mod 2 or k is outside (0, p)
        ExactnessFailure: If ``strict`` and an identity fails
    """
    require_prime(p)
    if (n + 1 - k) % 2:
        raise PreconditionError(f"k={k} must have the parity of n + 1 = {n + 1}")
    for permutation in permutations:
        if len(permutation) != n:
            raise PreconditionError(f"permutation {list(permutation)} does not act on {n} handles")
    modules = [specht_data(n, c, p) for c in resolution_indices(k, p, n + 1)]
    if not modules:
        raise PreconditionError(f"no Specht module of index {k} for n={n}")
    head = modules[0]
    report = Report(f"Specht resolution n={n} k={k} p={p}")

    for data in modules:
        report.add(f"dimension formula at c={data.c}", data.dimension == specht_dimension(n, data.partition[1]),
                   partition=list(data.partition), dimension=data.dimension)
    alternating = sum((-1) ** i * data.dimension for i, data in enumerate(modules))
    report.add("irreducible dimension = alternating sum", head.modular.quotient_dimension == alternating,
               None if head.modular.quotient_dimension == alternating else f"k={k}",
               rank=head.modular.quotient_dimension, alternating=alternating)

    for permutation in permutations:
        permutation = list(permutation)
        characters: List[int] = []
        for data in modules:
            value = character(n, data.c, permutation)
            formula = character_formula(n, data.c, permutation)
            report.add(f"character formula at c={data.c} for {permutation}", value == formula,
                       None if value == formula else permutation, trace=value, formula=formula)
            characters.append(value)
        expected = sum((-1) ** i * x for i, x in enumerate(characters)) % p
        traced = head.modular.quotient_trace(permutation_action(head.modular.source, permutation))
        report.add(f"modular trace for {permutation}", traced == expected,
                   None if traced == expected else permutation, trace=traced, alternating=expected)

    report.data.update({"n": n, "k": k, "p": p, "modules": [data.to_json() for data in modules],
                        "irreducible_dimension": head.modular.quotient_dimension})
    logger.info(f"{report.title}: {len(report.failures)} failed checks")
    if strict and not report.passed:
        raise ExactnessFailure(f"{report.title}: {report.failures[0].name}", f"k={k}")
    return report
