"""Vectorized numpy implementations of the inner loops.

Same signatures and results as ``_kernels_numba``; used when numba is
unavailable or ``SEGRECODES_BACKEND=numpy``.
"""

import numpy as np

# Rows of enumerated messages processed per vectorized block.
CHUNK = 1 << 15


def rref(A, add, mul, neg, inv):
    R = np.array(A, copy=True)
    m, n = R.shape
    pivots = []
    rank = 0
    for c in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(R[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            R[[rank, piv]] = R[[piv, rank]]
        R[rank] = mul[inv[R[rank, c]], R[rank]]
        col = R[:, c].copy()
        col[rank] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            R[rows] = add[R[rows], mul[neg[col[rows]][:, None], R[rank][None, :]]]
        pivots.append(c)
        rank += 1
    return R, np.array(pivots, dtype=np.int64)


def _digits(start, count, base, width):
    """Base-``base`` digits (most significant first) of start..start+count-1."""
    idx = np.arange(start, start + count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int64)
    for j in range(width - 1, -1, -1):
        out[:, j] = idx % base
        idx //= base
    return out


def _combine(rows, coeffs, add, mul, init):
    """init + sum_j coeffs[:, j] * rows[j] for each message in the block."""
    acc = np.broadcast_to(init, (coeffs.shape[0], init.shape[-1])).copy()
    for j in range(rows.shape[0]):
        acc = add[acc, mul[coeffs[:, j][:, None], rows[j][None, :]]]
    return acc


def min_weight(B, add, sub, mul):
    k, n = B.shape
    q = add.shape[0]
    best = n + 1
    for lead in range(k):
        tail = B[lead + 1:]
        width = tail.shape[0]
        total = q**width
        for start in range(0, total, CHUNK):
            count = min(CHUNK, total - start)
            coeffs = _digits(start, count, q, width)
            cw = _combine(tail, coeffs, add, mul, B[lead])
            w = int(np.count_nonzero(cw, axis=1).min())
            best = min(best, w)
            if best <= 1:
                return best
    return best


def min_support(B, pivot_sets, add, sub, mul):
    k, n = B.shape
    r = pivot_sets.shape[1]
    q = add.shape[0]
    best = n + 1
    for piv in pivot_sets:
        pset = set(int(p) for p in piv)
        free = [(i, c) for i in range(r) for c in range(int(piv[i]) + 1, k) if c not in pset]
        total = q ** len(free)
        for start in range(0, total, CHUNK):
            count = min(CHUNK, total - start)
            coeffs = _digits(start, count, q, len(free))
            union = np.zeros((count, n), dtype=bool)
            for i in range(r):
                cols = [j for j, (row, _) in enumerate(free) if row == i]
                src = B[[c for row, c in free if row == i]]
                W = _combine(src, coeffs[:, cols], add, mul, B[piv[i]])
                union |= W != 0
            best = min(best, int(union.sum(axis=1).min()))
            if best <= r:
                return best
    return best
