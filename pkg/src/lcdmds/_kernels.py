"""Numba kernels for the elimination-style hot paths.

All kernels work on int64 index matrices plus the owning field's dense
q x q add/mul tables (gf.DENSE_TABLE_LIMIT caps q).  inv_t and neg_t are
1-D.  Determinant/rank kernels mutate their matrix argument; callers pass
a scratch copy.  Matrix products do not live here: they go through the
coefficient-plane dgemm in linalg, which needs no dense tables.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def det_in_place(M, mul_t, add_t, inv_t, neg_t):
    n = M.shape[0]
    d = np.int64(1)
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if M[r, col] != 0:
                piv = r
                break
        if piv < 0:
            return np.int64(0)
        if piv != col:
            for j in range(col, n):
                tmp = M[col, j]
                M[col, j] = M[piv, j]
                M[piv, j] = tmp
            d = neg_t[d]
        pivot = M[col, col]
        d = mul_t[d, pivot]
        ip = inv_t[pivot]
        for r in range(col + 1, n):
            f = M[r, col]
            if f == 0:
                continue
            f = mul_t[f, ip]
            M[r, col] = 0
            for j in range(col + 1, n):
                v = M[col, j]
                if v != 0:
                    M[r, j] = add_t[M[r, j], neg_t[mul_t[f, v]]]
    return d


@njit(cache=True)
def rank_in_place(M, mul_t, add_t, inv_t, neg_t):
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        ip = inv_t[M[r, c]]
        for i in range(r + 1, rows):
            f = M[i, c]
            if f == 0:
                continue
            f = mul_t[f, ip]
            M[i, c] = 0
            for j in range(c + 1, cols):
                v = M[r, j]
                if v != 0:
                    M[i, j] = add_t[M[i, j], neg_t[mul_t[f, v]]]
        r += 1
    return r


@njit(cache=True)
def rref_in_place(M, pivots, mul_t, add_t, inv_t, neg_t):
    """Reduced row echelon form; fills pivots[:rank], returns rank."""
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        ip = inv_t[M[r, c]]
        if ip != 1:
            for j in range(c, cols):
                if M[r, j] != 0:
                    M[r, j] = mul_t[M[r, j], ip]
        for i in range(rows):
            if i == r:
                continue
            f = M[i, c]
            if f == 0:
                continue
            M[i, c] = 0
            for j in range(c + 1, cols):
                v = M[r, j]
                if v != 0:
                    M[i, j] = add_t[M[i, j], neg_t[mul_t[f, v]]]
        pivots[r] = c
        r += 1
    return r


@njit(cache=True)
def first_zero_column_minor(G, combos, mul_t, add_t, inv_t, neg_t):
    """Index of the first column set in `combos` whose k x k minor is zero, else -1."""
    k = G.shape[0]
    sub = np.empty((k, k), dtype=np.int64)
    for c in range(combos.shape[0]):
        for j in range(k):
            col = combos[c, j]
            for i in range(k):
                sub[i, j] = G[i, col]
        if det_in_place(sub, mul_t, add_t, inv_t, neg_t) == 0:
            return c
    return -1


@njit(cache=True)
def first_nonzero_minor(M, row_combos, col_combos, mul_t, add_t, inv_t, neg_t):
    """(ri, ci, det) of the first nonzero minor in lex scan order, else (-1, -1, 0)."""
    s = row_combos.shape[1]
    sub = np.empty((s, s), dtype=np.int64)
    for ri in range(row_combos.shape[0]):
        for ci in range(col_combos.shape[0]):
            for i in range(s):
                for j in range(s):
                    sub[i, j] = M[row_combos[ri, i], col_combos[ci, j]]
            d = det_in_place(sub, mul_t, add_t, inv_t, neg_t)
            if d != 0:
                return ri, ci, d
    return -1, -1, np.int64(0)


@njit(cache=True)
def min_weight(G, q, mul_t, add_t):
    """Minimum Hamming weight over all q^k - 1 nonzero codewords."""
    k, n = G.shape
    # scaled[i, c] = c * row i, precomputed
    scaled = np.zeros((k, q, n), dtype=np.int64)
    for i in range(k):
        for c in range(1, q):
            for j in range(n):
                v = G[i, j]
                scaled[i, c, j] = mul_t[c, v] if v != 0 else 0
    digits = np.zeros(k, dtype=np.int64)
    partial = np.zeros((k + 1, n), dtype=np.int64)
    best = n + 1
    total = q**k
    for step in range(1, total):
        # odometer increment, lowest level = digits[k-1]
        level = k - 1
        while digits[level] == q - 1:
            digits[level] = 0
            level -= 1
        digits[level] += 1
        # refresh partial sums from `level` down
        for i in range(level, k):
            c = digits[i]
            for j in range(n):
                partial[i + 1, j] = add_t[partial[i, j], scaled[i, c, j]] if c != 0 else partial[i, j]
        w = 0
        for j in range(n):
            if partial[k, j] != 0:
                w += 1
        if w < best:
            best = w
            if best == 1:
                return np.int64(best)
    return np.int64(best)
