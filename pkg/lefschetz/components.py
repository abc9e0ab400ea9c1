"""
Saturated integral bases of the Lefschetz components V^(j)(Sigma_g).

V^(j) is the kernel of F on forms of degree g + 1 - j. Bases come from
``utils.lattice.integer_kernel`` and are cached per (g, j); the cache is
filled under a lock and read freely afterwards.
"""

from __future__ import annotations

import dataclasses
import logging
import threading
from math import comb
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from exterior.multivector import Coefficient, MultiVector, inner, monomials
from lefschetz.sl2 import F
from utils.errors import EmptyComponent, GenusMismatch
from utils.lattice import integer_kernel
from utils.rational_linalg import solve_rational

logger = logging.getLogger(__name__)

_cache: Dict[Tuple[int, int], LefschetzComponent] = {}
_cache_lock = threading.Lock()


def component_degree(genus: int, j: int) -> int:
    return genus + 1 - j


def component_dimension(genus: int, j: int) -> int:
    """C(2g, g+1-j) - C(2g, g-1-j), and 0 outside 1 <= j <= g+1."""
    if j < 1 or j > genus + 1:
        return 0
    d = genus + 1 - j

    def binom(k):
        return comb(2 * genus, k) if 0 <= k <= 2 * genus else 0

    return binom(d) - binom(d - 2)


@dataclasses.dataclass(frozen=True)
class LefschetzComponent:
    """A saturated Z-basis of V^(j)(Sigma_g) with its Gram matrix."""

    genus: int
    index: int
    basis: Tuple[MultiVector, ...]
    gram: np.ndarray = dataclasses.field(compare=False, repr=False)

    @property
    def degree(self) -> int:
        return component_degree(self.genus, self.index)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_empty(self) -> bool:
        return not self.basis

    def basis_matrix(self) -> np.ndarray:
        """Columns are basis vectors in the ascending monomial basis of the degree."""
        masks = monomials(self.genus, self.degree) if self.degree >= 0 else ()
        position = {m: r for r, m in enumerate(masks)}
        matrix = np.zeros((len(masks), self.dimension), dtype=object)
        for k, vector in enumerate(self.basis):
            for m, c in vector.terms.items():
                matrix[position[m], k] = c
        return matrix

    def pairings(self, vectors: Sequence[MultiVector]) -> np.ndarray:
        """Matrix of <basis_r, vectors_k>."""
        result = np.zeros((self.dimension, len(vectors)), dtype=object)
        for k, v in enumerate(vectors):
            for r, b in enumerate(self.basis):
                result[r, k] = inner(b, v)
        return result

    def coordinates(self, x: MultiVector) -> List[Coefficient]:
        """Coordinates of an element of V^(j) in the basis (exact Gram solve)."""
        if x.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {x.genus}")
        if self.is_empty():
            return []
        return list(solve_rational(self.gram, self.pairings([x]))[:, 0])

    def vector(self, coordinates: Sequence[Coefficient]) -> MultiVector:
        result = MultiVector.zero(self.genus)
        for c, b in zip(coordinates, self.basis):
            if c:
                result = result + b * c
        return result

    def __str__(self) -> str:
        return f"V^({self.index})(Sigma_{self.genus}) dim {self.dimension} in degree {self.degree}"


def _build_component(genus: int, j: int) -> LefschetzComponent:
    d = component_degree(genus, j)
    if j < 1 or d < 0:
        return LefschetzComponent(genus, j, (), np.zeros((0, 0), dtype=object))
    sources = monomials(genus, d)
    images = [dict(F(MultiVector.basis(genus, m)).terms) for m in sources]
    kernel = integer_kernel(images)
    basis = tuple(MultiVector(genus, {sources[i]: c for i, c in vector.items()}) for vector in kernel)
    gram = np.array([[inner(x, y) for y in basis] for x in basis], dtype=object).reshape(len(basis), len(basis))
    expected = component_dimension(genus, j)
    assert len(basis) == expected, f"V^({j})(Sigma_{genus}) has rank {len(basis)}, expected {expected}"
    logger.debug(f"built V^({j})(Sigma_{genus}): {len(sources)} monomials, dim {len(basis)}")
    return LefschetzComponent(genus, j, basis, gram)


def component_basis(genus: int, j: int) -> LefschetzComponent:
    """
    Saturated integral basis of V^(j)(Sigma_g), cached.

    Args:
        genus: Surface genus
        j: Component index; outside 1..g+1 the component is empty

    Returns:
        LefschetzComponent: basis of ker F in degree g + 1 - j
    """
    key = (genus, j)
    component = _cache.get(key)
    if component is not None:
        return component
    with _cache_lock:
        component = _cache.get(key)
        if component is None:
            component = _build_component(genus, j)
            component.gram.setflags(write=False)
            _cache[key] = component
    return component


def require_component(genus: int, j: int) -> LefschetzComponent:
    component = component_basis(genus, j)
    if component.is_empty():
        raise EmptyComponent(f"V^({j})(Sigma_{genus}) is zero")
    return component


def compress(source: LefschetzComponent, target: LefschetzComponent,
             linear_map: Callable[[MultiVector], MultiVector]) -> np.ndarray:
    """
    Matrix of a map V^(source) -> V^(target) in the two component bases.

    Solves G_target X = B_target^T [map(b) for b in B_source] exactly; entries
    are ints where integral and Fractions otherwise. The image of every basis
    vector is assumed to lie in the span of the target basis (or to be
    projected orthogonally onto it).
    """
    images = [linear_map(b) for b in source.basis]
    if target.is_empty() or source.is_empty():
        return np.zeros((target.dimension, source.dimension), dtype=object)
    return solve_rational(target.gram, target.pairings(images))


def clear_cache():
    with _cache_lock:
        _cache.clear()
