"""
Integer lattice helpers: extended gcd, saturated integer kernels of sparse
maps, and elementary divisors.

Kernels are computed with unimodular row operations on the augmented system
[image | identity]; rows whose image part vanishes then span the kernel, and
because the accumulated transformation has determinant +-1 that span is
saturated in the source lattice.
"""

import logging
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

logger = logging.getLogger(__name__)


def exgcd(a: int, b: int) -> np.ndarray:
    """
    Extended GCD as a unimodular row operation.

    Args:
        a: an integer
        b: an integer

    Returns:
        A 2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0].
        If a divides b, M[0, 1] is 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign

    # Euclid on the column [a, b], tracking row operations next to it
    M = np.array([[b, 0, 1],
                  [a, 1, 0]], dtype=object)
    while M[1, 0] != 0:
        q = M[0, 0] // M[1, 0]
        M[0] -= q * M[1]
        M = M[::-1]

    g = M[0, 0]
    M = M[:, 1:].copy()
    M *= [a_sign, b_sign]
    if g != 0:
        M[1] = [-b_sign * b // g, a_sign * a // g]
    return M


def _combine(row_a: Dict[int, int], row_b: Dict[int, int], x: int, y: int) -> Dict[int, int]:
    """x * row_a + y * row_b with zeros dropped."""
    result: Dict[int, int] = {}
    if x:
        for k, v in row_a.items():
            result[k] = x * v
    if y:
        for k, v in row_b.items():
            result[k] = result.get(k, 0) + y * v
    return {k: v for k, v in result.items() if v}


def integer_kernel(images: Sequence[Mapping[int, int]]) -> List[Dict[int, int]]:
    """
    Saturated Z-basis of the kernel of a sparse integer map.

    Args:
        images: ``images[i]`` is the image of source basis vector i, as a
            target-key to coefficient map

    Returns:
        List of kernel vectors, each a source-index to coefficient map; the
        first nonzero coefficient of each vector is positive
    """
    # Each row carries its image and its combination of source vectors
    rows: List[Tuple[Dict[int, int], Dict[int, int]]] = [
        ({k: int(v) for k, v in image.items() if v}, {i: 1}) for i, image in enumerate(images)
    ]
    active = list(range(len(rows)))
    keys = sorted({k for image, _ in rows for k in image})

    for key in keys:
        holders = [r for r in active if rows[r][0].get(key)]
        if not holders:
            continue
        pivot = holders[0]
        for other in holders[1:]:
            image_p, combo_p = rows[pivot]
            image_o, combo_o = rows[other]
            M = exgcd(image_p[key], image_o[key])
            rows[pivot] = (_combine(image_p, image_o, M[0, 0], M[0, 1]),
                           _combine(combo_p, combo_o, M[0, 0], M[0, 1]))
            rows[other] = (_combine(image_p, image_o, M[1, 0], M[1, 1]),
                           _combine(combo_p, combo_o, M[1, 0], M[1, 1]))
        active.remove(pivot)

    kernel = []
    for r in active:
        image, combo = rows[r]
        assert not image, "row left active with a nonzero image"
        first = combo[min(combo)]
        kernel.append(combo if first > 0 else {k: -v for k, v in combo.items()})
    kernel.sort(key=lambda v: sorted(v.items()))
    logger.debug(f"integer kernel: {len(images)} sources, {len(kernel)} kernel vectors")
    return kernel


def elementary_divisors(matrix: np.ndarray) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form, as positive integers."""
    matrix = np.asarray(matrix, dtype=object)
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return []
    snf = smith_normal_form(Matrix(rows, cols, [int(x) for x in matrix.flat]), domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(min(rows, cols)) if snf[i, i] != 0]


def is_saturated(basis_columns: np.ndarray) -> bool:
    """
    True if the columns are independent and span a saturated sublattice.

    Equivalent to every elementary divisor being 1 with full column rank.
    """
    basis_columns = np.asarray(basis_columns, dtype=object)
    if basis_columns.size == 0:
        return True
    divisors = elementary_divisors(basis_columns)
    return len(divisors) == basis_columns.shape[1] and all(d == 1 for d in divisors)
