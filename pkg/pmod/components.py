"""
Reductions V^(j)_p = V^(j)_Z / p and their quotients by the null space of
the reduced pairing.

A quotient is represented by the pivot columns P of the reduced Gram matrix
G: the map x -> G[P, :] x identifies V_p / null(G) with F_p^r, and a map A
preserving the null space induces G[P, P]^-1 G[P, :] A[:, P] there.
"""

from __future__ import annotations

import dataclasses
import logging
import threading
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import isprime

from exterior.multivector import MultiVector, monomials
from lefschetz.components import LefschetzComponent, component_basis
from utils.errors import ContainmentViolation, PreconditionError
from utils.modp import matmul_mod, mod_p, nullspace_mod, rref_mod, solve_mod

logger = logging.getLogger(__name__)

_cache: Dict[Tuple[int, int, int], "ModularComponent"] = {}
_cache_lock = threading.Lock()


def require_prime(p: int, minimum: int = 3):
    if p < minimum or not isprime(p):
        raise PreconditionError(f"expected a prime >= {minimum}, got {p}")


@dataclasses.dataclass(frozen=True)
class ModularComponent:
    """The reduction of a saturated component mod p, with its Gram data over F_p."""

    p: int
    source: LefschetzComponent
    gram: np.ndarray = dataclasses.field(repr=False, compare=False)
    pivots: Tuple[int, ...]
    null_space: np.ndarray = dataclasses.field(repr=False, compare=False)

    @property
    def genus(self) -> int:
        return self.source.genus

    @property
    def index(self) -> int:
        return self.source.index

    @property
    def dimension(self) -> int:
        return self.source.dimension

    @property
    def quotient_dimension(self) -> int:
        return len(self.pivots)

    @property
    def null_dimension(self) -> int:
        return self.null_space.shape[1]

    def reduced_basis(self) -> np.ndarray:
        """Basis vectors mod p as columns in the monomial basis of the degree."""
        return mod_p(self.source.basis_matrix(), self.p)

    def null_vectors(self) -> List[MultiVector]:
        """The null space as forms with coefficients in 0..p-1."""
        columns = matmul_mod(self.reduced_basis(), self.null_space, self.p)
        masks = monomials(self.genus, self.source.degree)
        return [MultiVector(self.genus, {m: int(c) for m, c in zip(masks, column) if c})
                for column in columns.T]

    def coordinates_mod(self, vectors: Sequence[MultiVector]) -> np.ndarray:
        """
        Coordinates over F_p of forms lying in V^(j)_Z + p (exterior lattice).

        Raises:
            ContainmentViolation: If some vector is not in that sum
        """
        masks = monomials(self.genus, self.source.degree)
        position = {m: r for r, m in enumerate(masks)}
        rhs = np.zeros((len(masks), len(vectors)), dtype=object)
        for k, x in enumerate(vectors):
            for m, c in x.terms.items():
                if m not in position:
                    raise ContainmentViolation(f"{x} has a term outside degree {self.source.degree}")
                rhs[position[m], k] = c
        if self.dimension == 0:
            if np.any(mod_p(rhs, self.p)):
                raise ContainmentViolation(f"nonzero vector reduced into the zero space V^({self.index})_{self.p}")
            return np.zeros((0, len(vectors)), dtype=np.int64)
        try:
            return solve_mod(self.reduced_basis(), rhs, self.p)
        except ValueError as e:
            raise ContainmentViolation(f"image not in V^({self.index})_Z + {self.p}L: {e}")

    def quotient_matrix(self, action: np.ndarray) -> np.ndarray:
        """Induced map on the quotient for an action matrix in basis coordinates."""
        if not self.pivots:
            return np.zeros((0, 0), dtype=np.int64)
        action = mod_p(action, self.p)
        pivots = list(self.pivots)
        rows = self.gram[pivots, :]
        return solve_mod(self.gram[np.ix_(pivots, pivots)], matmul_mod(rows, action[:, pivots], self.p), self.p)

    def quotient_trace(self, action: np.ndarray) -> int:
        return int(np.trace(self.quotient_matrix(action)) % self.p)

    def to_json(self) -> dict:
        return {"g": self.genus, "j": self.index, "p": self.p, "dimension": self.dimension,
                "quotient_dimension": self.quotient_dimension, "null_dimension": self.null_dimension}

    def __str__(self) -> str:
        return (f"V^({self.index})_{self.p}(Sigma_{self.genus}): dim {self.dimension}, "
                f"quotient {self.quotient_dimension}")


def reduce_component(component: LefschetzComponent, p: int) -> ModularComponent:
    """Reduce any saturated component (or sub-lattice with Gram data) mod p."""
    require_prime(p)
    n = component.dimension
    if n == 0:
        return ModularComponent(p, component, np.zeros((0, 0), dtype=np.int64), (),
                                np.zeros((0, 0), dtype=np.int64))
    gram = mod_p(component.gram, p)
    _, pivots = rref_mod(gram, p)
    null_space = nullspace_mod(gram, p)
    logger.debug(f"reduced V^({component.index})(Sigma_{component.genus}) mod {p}: "
                 f"rank {len(pivots)} of {n}")
    return ModularComponent(p, component, gram, tuple(pivots), null_space)


def modular_component(genus: int, j: int, p: int) -> ModularComponent:
    """
    V^(j)_p(Sigma_g) with Gram rank and null space, cached per (g, j, p).

    Args:
        genus: Surface genus
        j: Component index
        p: Prime >= 3

    Returns:
        ModularComponent: quotient dimension = rank of the Gram matrix mod p
    """
    key = (genus, j, p)
    component = _cache.get(key)
    if component is not None:
        return component
    require_prime(p)
    with _cache_lock:
        component = _cache.get(key)
        if component is None:
            component = reduce_component(component_basis(genus, j), p)
            _cache[key] = component
    return component
