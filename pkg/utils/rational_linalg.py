"""
Exact linear algebra over QQ through sympy's DomainMatrix.

Inputs are numpy object arrays (or nested lists) of ints or Fractions;
outputs are numpy object arrays of ints where possible and Fractions
otherwise.
"""

from fractions import Fraction
from typing import Sequence, Union

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Number = Union[int, Fraction]


def to_domain_matrix(matrix, domain=QQ) -> DomainMatrix:
    matrix = np.asarray(matrix, dtype=object)
    if matrix.ndim == 1:
        matrix = matrix.reshape(-1, 1)
    rows, cols = matrix.shape

    def convert(x):
        x = Fraction(x)
        return domain(x.numerator, x.denominator) if x.denominator != 1 else domain(x.numerator)

    return DomainMatrix([[convert(x) for x in row] for row in matrix], (rows, cols), domain)


def _to_fraction(element) -> Number:
    value = Fraction(int(element.numerator), int(element.denominator))
    return int(value) if value.denominator == 1 else value


def from_domain_matrix(matrix: DomainMatrix) -> np.ndarray:
    rows, cols = matrix.shape
    result = np.zeros((rows, cols), dtype=object)
    for i, row in enumerate(matrix.to_list()):
        for j, element in enumerate(row):
            result[i, j] = _to_fraction(element)
    return result


def solve_rational(lhs, rhs) -> np.ndarray:
    """
    Solve lhs @ X = rhs exactly for a square nonsingular ``lhs``.

    Returns:
        np.ndarray: X with int entries where integral, Fraction otherwise
    """
    lhs_dm = to_domain_matrix(lhs)
    rhs_dm = to_domain_matrix(rhs)
    if lhs_dm.shape[0] == 0:
        return np.zeros((0, rhs_dm.shape[1]), dtype=object)
    return from_domain_matrix(lhs_dm.lu_solve(rhs_dm))


def is_integral(matrix: np.ndarray) -> bool:
    return all(isinstance(x, int) or Fraction(x).denominator == 1 for x in np.asarray(matrix).flat)


def rank_rational(matrix) -> int:
    matrix = np.asarray(matrix, dtype=object)
    if matrix.size == 0:
        return 0
    return to_domain_matrix(matrix).rank()


def nullity_rational(matrix) -> int:
    matrix = np.asarray(matrix, dtype=object)
    return matrix.shape[1] - rank_rational(matrix)


def trace(matrix: np.ndarray) -> Number:
    total = sum(np.asarray(matrix, dtype=object).diagonal(), 0)
    return int(total) if Fraction(total).denominator == 1 else total


def matrix_from_columns(columns: Sequence[Sequence[Number]], rows: int) -> np.ndarray:
    """Stack coordinate columns into a ``rows`` x len(columns) object array."""
    result = np.zeros((rows, len(columns)), dtype=object)
    for k, column in enumerate(columns):
        result[:, k] = list(column)
    return result
