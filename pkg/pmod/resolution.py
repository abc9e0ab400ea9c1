"""
E-power maps between reduced components and the resolution

    ... -> V^(c_2)_p -> V^(c_1)_p -> V^(c_0)_p -> quotient of V^(k)_p -> 0

with c_i = ip + k for even i and (i + 1)p - k for odd i. Consecutive indices
differ by 2(p - k) and 2k alternately, so the maps are E^(p-k) and E^k.
"""

import logging
from typing import List, Tuple

import numpy as np

from lefschetz.components import component_basis
from lefschetz.sl2 import E_power
from models.reports import Report
from pmod.components import modular_component, require_prime
from utils.errors import ExactnessFailure, PreconditionError
from utils.modp import matmul_mod, rank_mod

logger = logging.getLogger(__name__)


def resolution_indices(k: int, p: int, top: int) -> List[int]:
    """c_0, c_1, ... up to the last index <= top."""
    if not 0 < k < p:
        raise PreconditionError(f"resolution index must satisfy 0 < k < p, got k={k}, p={p}")
    indices = []
    i = 0
    while True:
        c = i * p + k if i % 2 == 0 else (i + 1) * p - k
        if c > top:
            return indices
        indices.append(c)
        i += 1


def ek_map(genus: int, j: int, k: int, p: int) -> np.ndarray:
    """
    E^k from V^(j)_p to V^(j-2k)_p.

    For j = k mod p the integral image of V^(j)_Z lies in V^(j-2k)_Z plus p
    times the exterior lattice, so the reduction is well defined.

    Returns:
        np.ndarray: F_p matrix of shape (dim V^(j-2k), dim V^(j))

    Raises:
        PreconditionError: If j != k mod p or j - 2k < 1
        ContainmentViolation: If some image leaves V^(j-2k)_Z + pL
    """
    require_prime(p)
    if (j - k) % p:
        raise PreconditionError(f"E^{k} is only defined on V^({j})_{p} when j = k mod p")
    if j - 2 * k < 1:
        raise PreconditionError(f"E^{k} would map V^({j}) below V^(1)")
    source = component_basis(genus, j)
    target = modular_component(genus, j - 2 * k, p)
    if source.is_empty():
        return np.zeros((target.dimension, 0), dtype=np.int64)
    images = [E_power(b, k) for b in source.basis]
    matrix = target.coordinates_mod(images)
    logger.debug(f"E^{k}: V^({j})_{p} -> V^({j - 2 * k})_{p} in genus {genus}, rank {rank_mod(matrix, p)}")
    return matrix


def resolution_maps(k: int, p: int, genus: int) -> List[Tuple[int, int, np.ndarray]]:
    """(c_i, exponent, E-power matrix V^(c_i) -> V^(c_(i-1))) for i >= 1."""
    indices = resolution_indices(k, p, genus + 1)
    return [(c, (c - previous) // 2, ek_map(genus, c, (c - previous) // 2, p))
            for previous, c in zip(indices, indices[1:])]


def resolution_check(k: int, p: int, genus: int, strict: bool = True) -> Report:
    """
    Verify exactness of the truncated resolution of the quotient of V^(k)_p.

    Checks that consecutive maps compose to zero, that the image equals the
    kernel at every inner node, that the first map lands in the null space of
    the pairing with the right rank, and that the last map is injective.

    Raises:
        ExactnessFailure: If ``strict`` and any check fails; the location
            names the offending node
    """
    require_prime(p)
    report = Report(f"resolution of V^({k})_{p}(Sigma_{genus})")
    indices = resolution_indices(k, p, genus + 1)
    nodes = [{"c": c, "dimension": component_basis(genus, c).dimension} for c in indices]
    if not indices:
        report.data.update({"genus": genus, "k": k, "p": p, "nodes": [], "quotient_dimension": 0,
                            "kernel_dimension": 0})
        return report

    head = modular_component(genus, k, p)
    maps = resolution_maps(k, p, genus)
    ranks = [rank_mod(matrix, p) for _, _, matrix in maps]
    for node, (c, exponent, _), rank in zip(nodes[1:], maps, ranks):
        node.update({"exponent": exponent, "rank": rank})

    # at V^(k): image of the first map = null space of the pairing
    if maps:
        first = maps[0][2]
        in_radical = not np.any(matmul_mod(head.gram, first, p))
        report.add(f"E^{maps[0][1]} lands in the null space at V^({k})", in_radical)
        report.add(f"image = kernel at V^({k})", ranks[0] == head.null_dimension,
                   None if ranks[0] == head.null_dimension else f"V^({k})",
                   rank=ranks[0], null_dimension=head.null_dimension)
    else:
        report.add(f"pairing nondegenerate at V^({k})", head.null_dimension == 0,
                   None if head.null_dimension == 0 else f"V^({k})", null_dimension=head.null_dimension)

    # inner nodes V^(c_i), 1 <= i < n
    for i in range(1, len(maps)):
        c = indices[i]
        outgoing, incoming = maps[i - 1][2], maps[i][2]
        composite_zero = not np.any(matmul_mod(outgoing, incoming, p))
        report.add(f"composite vanishes at V^({c})", composite_zero, None if composite_zero else f"V^({c})")
        kernel = nodes[i]["dimension"] - ranks[i - 1]
        report.add(f"image = kernel at V^({c})", ranks[i] == kernel, None if ranks[i] == kernel else f"V^({c})",
                   rank=ranks[i], kernel_dimension=kernel)

    # 0 -> V^(c_n)
    if maps:
        last = indices[-1]
        injective = ranks[-1] == nodes[-1]["dimension"]
        report.add(f"injective at V^({last})", injective, None if injective else f"V^({last})",
                   rank=ranks[-1], dimension=nodes[-1]["dimension"])

    report.data.update({"genus": genus, "k": k, "p": p, "nodes": nodes,
                        "quotient_dimension": head.quotient_dimension, "kernel_dimension": head.null_dimension})
    logger.info(f"{report.title}: {len(report.failures)} failed checks, quotient dimension {head.quotient_dimension}")
    if strict and not report.passed:
        failure = report.failures[0]
        raise ExactnessFailure(f"{report.title} is not exact: {failure.name}", failure.witness or failure.name)
    return report
