"""Compiled inner loops.  Signatures mirror ``_kernels_numpy`` exactly.

All arrays hold element codes (int32); arithmetic goes through the dense
field tables from ``FieldSpec.tables()``.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def rref(A, add, mul, neg, inv):
    R = A.copy()
    m, n = R.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    rank = 0
    tmp = np.empty(n, dtype=R.dtype)
    for c in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if R[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            tmp[:] = R[piv]
            R[piv] = R[rank]
            R[rank] = tmp
        s = inv[R[rank, c]]
        if s != 1:
            for j in range(c, n):
                R[rank, j] = mul[s, R[rank, j]]
        for i in range(m):
            if i != rank:
                f = R[i, c]
                if f != 0:
                    nf = neg[f]
                    for j in range(c, n):
                        e = R[rank, j]
                        if e != 0:
                            R[i, j] = add[R[i, j], mul[nf, e]]
        pivots[rank] = c
        rank += 1
    return R, pivots[:rank].copy()


@njit(cache=True)
def _multiples(B, q, mul):
    k, n = B.shape
    out = np.empty((k, q, n), dtype=B.dtype)
    for j in range(k):
        for c in range(q):
            for t in range(n):
                out[j, c, t] = mul[c, B[j, t]]
    return out


@njit(cache=True)
def min_weight(B, add, sub, mul):
    """Least weight over messages whose first nonzero entry is 1."""
    k, n = B.shape
    q = add.shape[0]
    mult = _multiples(B, q, mul)
    wrap = sub[0, q - 1]
    best = n + 1
    cw = np.empty(n, dtype=B.dtype)
    digits = np.zeros(k, dtype=np.int64)
    for lead in range(k):
        w = 0
        for t in range(n):
            cw[t] = B[lead, t]
            if cw[t] != 0:
                w += 1
        if w < best:
            best = w
        if best <= 1:
            return best
        for j in range(lead + 1, k):
            digits[j] = 0
        while True:
            j = k - 1
            while j > lead and digits[j] == q - 1:
                for t in range(n):
                    cw[t] = add[cw[t], mult[j, wrap, t]]
                digits[j] = 0
                j -= 1
            if j == lead:
                break
            old = digits[j]
            step = sub[old + 1, old]
            digits[j] = old + 1
            w = 0
            for t in range(n):
                v = add[cw[t], mult[j, step, t]]
                cw[t] = v
                if v != 0:
                    w += 1
            if w < best:
                best = w
                if best <= 1:
                    return best
    return best


@njit(cache=True)
def min_support(B, pivot_sets, add, sub, mul):
    """Least support size over subspaces spanned by r x k RREF message matrices.

    ``pivot_sets`` lists the pivot columns of each RREF shape, one row each.
    Free entries run in odometer order with the last entry fastest.
    """
    k, n = B.shape
    r = pivot_sets.shape[1]
    q = add.shape[0]
    mult = _multiples(B, q, mul)
    wrap = sub[0, q - 1]
    best = n + 1
    W = np.empty((r, n), dtype=B.dtype)
    free_row = np.empty(r * k, dtype=np.int64)
    free_col = np.empty(r * k, dtype=np.int64)
    digits = np.zeros(r * k, dtype=np.int64)
    is_piv = np.zeros(k, dtype=np.bool_)
    for ps in range(pivot_sets.shape[0]):
        piv = pivot_sets[ps]
        is_piv[:] = False
        for i in range(r):
            is_piv[piv[i]] = True
        nfree = 0
        for i in range(r):
            for c in range(piv[i] + 1, k):
                if not is_piv[c]:
                    free_row[nfree] = i
                    free_col[nfree] = c
                    nfree += 1
        for i in range(r):
            for t in range(n):
                W[i, t] = B[piv[i], t]
        for f in range(nfree):
            digits[f] = 0
        first = True
        while True:
            if not first:
                f = nfree - 1
                while f >= 0 and digits[f] == q - 1:
                    i = free_row[f]
                    c = free_col[f]
                    for t in range(n):
                        W[i, t] = add[W[i, t], mult[c, wrap, t]]
                    digits[f] = 0
                    f -= 1
                if f < 0:
                    break
                old = digits[f]
                step = sub[old + 1, old]
                digits[f] = old + 1
                i = free_row[f]
                c = free_col[f]
                for t in range(n):
                    W[i, t] = add[W[i, t], mult[c, step, t]]
            first = False
            size = 0
            for t in range(n):
                for i in range(r):
                    if W[i, t] != 0:
                        size += 1
                        break
            if size < best:
                best = size
                if best <= r:
                    return best
    return best
