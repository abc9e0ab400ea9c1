"""
Integer symplectic matrices and their action on the exterior algebra.

Matrices act on column vectors of (a_1..a_g, b_1..b_g) coordinates, so column
k of M is the image of the k-th basis class.
"""

from __future__ import annotations

import dataclasses
import logging
import random
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix
from sympy.polys.matrices import DomainMatrix

from exterior.multivector import (HomologyClass, MultiVector, inner, jmap, mask_to_list,
                                  reorder_sign)
from utils.errors import GenusMismatch, InvalidSymplecticMatrix

logger = logging.getLogger(__name__)

DEFAULT_TRANSVECTION_LENGTH = 20


@lru_cache(maxsize=None)
def _skew_form(genus: int) -> np.ndarray:
    form = np.zeros((2 * genus, 2 * genus), dtype=object)
    for i in range(genus):
        form[i, genus + i] = 1
        form[genus + i, i] = -1
    form.setflags(write=False)
    return form


def skew_form_matrix(genus: int) -> np.ndarray:
    """Matrix S of the intersection form: (x, y) = x^T S y."""
    return _skew_form(genus).copy()


@dataclasses.dataclass(frozen=True)
class SymplecticMatrix:
    """A 2g x 2g integer matrix M with M^T S M = S."""

    genus: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = 2 * self.genus
        if len(rows) != n or any(len(row) != n for row in rows):
            raise InvalidSymplecticMatrix(f"expected a {n}x{n} matrix for genus {self.genus}")
        if not self.is_symplectic(self.as_array(), self.genus):
            raise InvalidSymplecticMatrix(f"matrix does not preserve the skew form: {rows}")

    @staticmethod
    def is_symplectic(matrix: np.ndarray, genus: int) -> bool:
        form = _skew_form(genus)
        return bool(np.array_equal(matrix.T.dot(form).dot(matrix), form))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SymplecticMatrix:
        if len(rows) % 2:
            raise InvalidSymplecticMatrix(f"odd dimension {len(rows)}")
        return cls(len(rows) // 2, tuple(tuple(r) for r in rows))

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> SymplecticMatrix:
        return cls.from_rows([[int(x) for x in row] for row in matrix])

    @classmethod
    def identity(cls, genus: int) -> SymplecticMatrix:
        return cls.from_array(np.eye(2 * genus, dtype=object))

    @classmethod
    def transvection(cls, vector: HomologyClass, sign: int = 1) -> SymplecticMatrix:
        """x -> x + sign * (v, x) v."""
        g = vector.genus
        v = np.array(vector.coords, dtype=object).reshape(-1, 1)
        matrix = np.eye(2 * g, dtype=object) + sign * v.dot(v.T).dot(_skew_form(g))
        return cls.from_array(matrix)

    @classmethod
    def block_diagonal(cls, a_block: np.ndarray) -> SymplecticMatrix:
        """diag(A, A^-T) for a unimodular A; preserves span(a) and span(b)."""
        a_block = np.array(a_block, dtype=object)
        g = a_block.shape[0]
        inverse_t = _integer_inverse(a_block).T
        matrix = np.zeros((2 * g, 2 * g), dtype=object)
        matrix[:g, :g] = a_block
        matrix[g:, g:] = inverse_t
        return cls.from_array(matrix)

    @classmethod
    def complex_structure(cls, genus: int) -> SymplecticMatrix:
        """J: a_i -> b_i, b_i -> -a_i; swaps span(a) and span(b)."""
        return cls.from_array(-_skew_form(genus))

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object)

    def __matmul__(self, other: SymplecticMatrix) -> SymplecticMatrix:
        if self.genus != other.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")
        return SymplecticMatrix.from_array(self.as_array().dot(other.as_array()))

    def inverse(self) -> SymplecticMatrix:
        # M^-1 = S^-1 M^T S with S^-1 = -S
        form = _skew_form(self.genus)
        return SymplecticMatrix.from_array(-form.dot(self.as_array().T).dot(form))

    def trace(self) -> int:
        return int(sum(self.entries[i][i] for i in range(2 * self.genus)))

    def apply(self, x: HomologyClass) -> HomologyClass:
        if x.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {x.genus}")
        return HomologyClass(self.genus, tuple(int(v) for v in self.as_array().dot(np.array(x.coords, dtype=object))))

    def column(self, k: int) -> MultiVector:
        return MultiVector(self.genus, {1 << r: self.entries[r][k] for r in range(2 * self.genus)})

    def charpoly(self) -> List[int]:
        """Coefficients of det(tI - M), leading coefficient first."""
        return [int(c) for c in DomainMatrix.from_Matrix(Matrix(self.entries)).charpoly()]

    def to_json(self) -> dict:
        return {"g": self.genus, "matrix": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, data) -> SymplecticMatrix:
        if isinstance(data, Mapping):
            matrix = cls.from_rows(data["matrix"])
            if "g" in data and int(data["g"]) != matrix.genus:
                raise GenusMismatch(f"declared genus {data['g']} for a {2 * matrix.genus}-dimensional matrix")
            return matrix
        return cls.from_rows(data)

    def __str__(self) -> str:
        return f"Sp({2 * self.genus}) {list(map(list, self.entries))}"


def _integer_inverse(matrix: np.ndarray) -> np.ndarray:
    block = Matrix([[int(x) for x in row] for row in matrix])
    det = int(block.det())
    if det not in (1, -1):
        raise InvalidSymplecticMatrix(f"block is not unimodular (det {det})")
    inverse = block.inv()
    return np.array([[int(inverse[i, j]) for j in range(inverse.cols)]
                     for i in range(inverse.rows)], dtype=object)


def _random_vector(genus: int, rng: random.Random) -> HomologyClass:
    n = 2 * genus
    coords = [0] * n
    i = rng.randrange(n)
    coords[i] = 1
    if n > 1 and rng.random() < 0.5:
        j = rng.randrange(n - 1)
        j = j if j < i else j + 1
        coords[j] = rng.choice((1, -1))
    return HomologyClass(genus, tuple(coords))


def random_symplectic(genus: int, rng: random.Random,
                      length: int = DEFAULT_TRANSVECTION_LENGTH) -> SymplecticMatrix:
    """
    Random element of Sp(2g, Z) as a word in elementary transvections.

    Args:
        genus: Surface genus
        rng: Seeded random source
        length: Number of transvections in the word

    Returns:
        SymplecticMatrix: product of ``length`` transvections x -> x +- (v, x) v
    """
    result = np.eye(2 * genus, dtype=object)
    for _ in range(length):
        v = _random_vector(genus, rng)
        step = SymplecticMatrix.transvection(v, rng.choice((1, -1)))
        result = step.as_array().dot(result)
    return SymplecticMatrix.from_array(result)


def random_unimodular(size: int, rng: random.Random, length: int = 8) -> np.ndarray:
    """Random GL(n, Z) matrix as a word in elementary row operations and sign flips."""
    matrix = np.eye(size, dtype=object)
    for _ in range(length):
        if size > 1 and rng.random() < 0.8:
            i, j = rng.sample(range(size), 2)
            matrix[i] = matrix[i] + rng.choice((1, -1)) * matrix[j]
        else:
            i = rng.randrange(size)
            matrix[i] = -matrix[i]
    return matrix


def sp_action(matrix: SymplecticMatrix, x: MultiVector) -> MultiVector:
    """Induced action on the exterior algebra: M(f_1 ^ ... ^ f_k) = Mf_1 ^ ... ^ Mf_k."""
    if matrix.genus != x.genus:
        raise GenusMismatch(f"genus {matrix.genus} vs {x.genus}")
    columns = [{1 << r: matrix.entries[r][k] for r in range(2 * matrix.genus) if matrix.entries[r][k]}
               for k in range(2 * matrix.genus)]
    result: Dict[int, int] = {}
    for mask, coefficient in x.terms.items():
        for image, value in _monomial_image(mask, columns).items():
            result[image] = result.get(image, 0) + coefficient * value
    return MultiVector(x.genus, result)


def _monomial_image(mask: int, columns: List[Dict[int, int]]) -> Dict[int, int]:
    image: Dict[int, int] = {0: 1}
    for k in mask_to_list(mask):
        step: Dict[int, int] = {}
        for m1, c1 in image.items():
            for m2, c2 in columns[k].items():
                if m1 & m2:
                    continue
                target = m1 | m2
                step[target] = step.get(target, 0) + reorder_sign(m1, m2) * c1 * c2
        image = {m: c for m, c in step.items() if c}
        if not image:
            break
    return image


def _assert_form_convention(genus: int = 2):
    """(x, Jy) = <x, y> on degree-1 classes."""
    for i in range(2 * genus):
        for k in range(2 * genus):
            x = HomologyClass(genus, tuple(1 if r == i else 0 for r in range(2 * genus)))
            y = MultiVector(genus, {1 << k: 1})
            jy = jmap(y)
            jy_class = HomologyClass(genus, tuple(jy.coefficient(1 << r) for r in range(2 * genus)))
            assert x.skew(jy_class) == inner(x.to_multivector(), y), "skew form convention broken"


_assert_form_convention()
