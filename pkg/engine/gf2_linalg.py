"""Dense GF(2) linear algebra on numpy uint8 arrays (XOR row operations)."""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


def int_to_bits(value: int, width: int) -> np.ndarray:
    return np.array([(value >> i) & 1 for i in range(width)], dtype=np.uint8)


def bits_to_int(bits: Iterable[int]) -> int:
    out = 0
    for i in np.flatnonzero(np.asarray(bits, dtype=np.uint8)):
        out |= 1 << int(i)
    return out


def elements_to_matrix(values: Sequence[int], width: int) -> np.ndarray:
    """Row i holds the coordinate bits of values[i]."""
    if not values:
        return np.zeros((0, width), dtype=np.uint8)
    return np.stack([int_to_bits(v, width) for v in values])


def row_echelon(M, n_pivot_cols: Optional[int] = None, reduced: bool = False) -> Tuple[np.ndarray, List[int]]:
    """Row-reduce a binary matrix.

    Pivots are searched in the first ``n_pivot_cols`` columns; row operations act on
    the full width so augmented columns follow along. With ``reduced`` the pivot
    columns are cleared above the pivot too.
    """
    R = (np.asarray(M, dtype=np.uint8) % 2).copy()
    rows, cols = R.shape
    if n_pivot_cols is None:
        n_pivot_cols = cols

    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(n_pivot_cols):
        if pivot_row == rows:
            break
        candidates = np.flatnonzero(R[pivot_row:, col])
        if candidates.size == 0:
            continue
        found = pivot_row + int(candidates[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]

        mask = R[:, col].astype(bool)
        mask[pivot_row] = False
        if not reduced:
            mask[:pivot_row] = False
        if mask.any():
            R[mask] ^= R[pivot_row]

        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def rank(M) -> int:
    M = np.asarray(M, dtype=np.uint8)
    if M.size == 0:
        return 0
    _, pivots = row_echelon(M)
    return len(pivots)


def inverse(M) -> np.ndarray:
    M = np.asarray(M, dtype=np.uint8)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError(f"Square matrix required, got shape {M.shape}")
    aug = np.concatenate([M % 2, np.eye(n, dtype=np.uint8)], axis=1)
    R, pivots = row_echelon(aug, n_pivot_cols=n, reduced=True)
    if len(pivots) != n:
        raise ValueError(f"Matrix is singular over GF(2) (rank {len(pivots)} < {n})")
    return R[:, n:].copy()


def solve(A, b) -> np.ndarray:
    """One solution x of A x = b; raises ValueError when inconsistent."""
    A = np.asarray(A, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8).reshape(-1, 1)
    cols = A.shape[1]
    R, pivots = row_echelon(np.concatenate([A % 2, b % 2], axis=1), n_pivot_cols=cols, reduced=True)
    if R[len(pivots):, cols].any():
        raise ValueError("Inconsistent GF(2) system")
    x = np.zeros(cols, dtype=np.uint8)
    for r, c in enumerate(pivots):
        x[c] = R[r, cols]
    return x


def independent_rows(M) -> List[int]:
    """Indices of a maximal set of linearly independent rows, smallest first."""
    _, pivots = row_echelon(np.asarray(M, dtype=np.uint8).T)
    return pivots


def left_inverse(A) -> np.ndarray:
    """L with L @ A = I for a full-column-rank A (m x n, m >= n)."""
    A = np.asarray(A, dtype=np.uint8)
    m, n = A.shape
    rows = independent_rows(A)
    if len(rows) != n:
        raise ValueError(f"Matrix has column rank {len(rows)} < {n}; no left inverse")
    L = np.zeros((n, m), dtype=np.uint8)
    L[:, rows] = inverse(A[rows, :])
    return L


def matmul(A, B) -> np.ndarray:
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64) % 2).astype(np.uint8)


def row_supports(M) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in np.asarray(M))
