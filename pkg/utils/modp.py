"""
Dense linear algebra over the prime field F_p with numpy int64 arrays.

Elimination is row-vectorized; entries stay below p, so products fit in int64
for every prime used here.
"""

from typing import List, Tuple

import numpy as np


def mod_p(A: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(np.asarray(A) % p, dtype=np.int64)


def inv_mod_scalar(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def rref_mod(aug: np.ndarray, p: int, ncols: int = None) -> Tuple[np.ndarray, List[int]]:
    """
    RREF over GF(p).

    Args:
        aug: Matrix to reduce (copied)
        p: Prime modulus
        ncols: Only pivot in the first ``ncols`` columns (default: all)

    Returns:
        (reduced matrix, pivot columns)
    """
    A = mod_p(np.array(aug, copy=True), p)
    m, n = A.shape
    limit = n if ncols is None else ncols
    r = 0
    piv_cols: List[int] = []
    for c in range(limit):
        if r == m:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r, :] = (A[r, :] * inv_mod_scalar(A[r, c], p)) % p
        factors = A[:, c].copy()
        factors[r] = 0
        A = (A - np.outer(factors, A[r, :])) % p
        piv_cols.append(c)
        r += 1
    return A, piv_cols


def rank_mod(A: np.ndarray, p: int) -> int:
    if A.size == 0:
        return 0
    _, pivots = rref_mod(A, p)
    return len(pivots)


def nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace basis of A over GF(p); columns form a basis."""
    A = mod_p(A, p)
    m, n = A.shape
    if m == 0:
        return np.eye(n, dtype=np.int64)
    R, piv_cols = rref_mod(A, p)
    free = [j for j in range(n) if j not in set(piv_cols)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(piv_cols):
            basis[pc, k] = (-R[row, f]) % p
    return basis


def solve_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """
    Solve A X = B over GF(p) for a full-column-rank A.

    Raises:
        ValueError: If A lacks full column rank or the system is inconsistent
    """
    A = mod_p(A, p)
    B = mod_p(B, p)
    if B.ndim == 1:
        B = B.reshape(-1, 1)
    m, n = A.shape
    R, piv_cols = rref_mod(np.concatenate([A, B], axis=1), p, ncols=n)
    if len(piv_cols) != n:
        raise ValueError(f"matrix has rank {len(piv_cols)} < {n} columns mod {p}")
    if np.any(R[n:, n:]):
        raise ValueError("inconsistent linear system over GF(p)")
    return R[:n, n:]


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    # int64 products of residues below p stay exact for the sizes used here
    return mod_p(np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64), p)
