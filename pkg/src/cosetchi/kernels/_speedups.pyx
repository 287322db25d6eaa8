# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: chain counting/enumeration and int64 Smith reduction."""

import numpy as np

from cosetchi.errors import SimplexCapExceeded

HAS_FAST_SNF = True


def chain_counts(indptr, indices, long long cap):
    """Number of chains per size in a strict order given as CSR adjacency."""
    cdef int[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef Py_ssize_t n = ip.shape[0] - 1
    if n == 0:
        return []
    if n > cap:
        raise SimplexCapExceeded(f"simplex count exceeds cap {cap}")
    cdef long long running = n
    totals = [int(n)]
    cur_arr = np.ones(n, dtype=np.int64)
    nxt_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] cur = cur_arr
    cdef long long[::1] nxt = nxt_arr
    cdef Py_ssize_t v, k
    cdef long long acc, level
    while True:
        level = 0
        for v in range(n):
            acc = 0
            for k in range(ip[v], ip[v + 1]):
                acc += cur[ix[k]]
            nxt[v] = acc
            level += acc
        if level == 0:
            return totals
        running += level
        if running > cap:
            raise SimplexCapExceeded(f"simplex count exceeds cap {cap}")
        totals.append(int(level))
        cur_arr, nxt_arr = nxt_arr, cur_arr
        cur = cur_arr
        nxt = nxt_arr
    return totals


def enumerate_chains(indptr, indices, long long cap):
    """All chains of a strict order (CSR adjacency), grouped by size."""
    cdef int[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef Py_ssize_t n = ip.shape[0] - 1
    out = []
    if n == 0:
        return out
    path_arr = np.zeros(n, dtype=np.int32)
    pos_arr = np.zeros(n + 1, dtype=np.int32)
    cdef int[::1] path = path_arr
    cdef int[::1] pos = pos_arr
    cdef long long total = 0
    cdef Py_ssize_t v0, depth, i
    cdef int w
    for v0 in range(n):
        depth = 0
        path[0] = v0
        pos[0] = ip[v0]
        while depth >= 0:
            if depth + 1 > len(out):
                out.append([])
            if pos[depth] == ip[path[depth]]:
                total += 1
                if total > cap:
                    raise SimplexCapExceeded(f"simplex count exceeds cap {cap}")
                out[depth].append(tuple([int(path[i]) for i in range(depth + 1)]))
            if pos[depth] < ip[path[depth] + 1]:
                w = ix[pos[depth]]
                pos[depth] += 1
                path[depth + 1] = w
                pos[depth + 1] = ip[w]
                depth += 1
            else:
                depth -= 1
    return out


def snf_diagonal_i64(matrix):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (diag, ok).  All arithmetic is int64; whenever any entry's
    magnitude reaches 2**31 the reduction aborts with ok=False so the caller
    can redo the computation with arbitrary-precision integers.  Diagonal
    entries are positive but not yet in divisibility order.
    """
    a_arr = np.array(matrix, dtype=np.int64, copy=True)
    if a_arr.ndim != 2:
        raise ValueError("need a 2-d matrix")
    cdef long long[:, ::1] a = np.ascontiguousarray(a_arr)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef long long GUARD = 1LL << 31
    diag = []
    cdef Py_ssize_t t = 0, i, j, bi, bj
    cdef long long v, av, bv, p, q, x
    cdef bint dirty, found
    if np.abs(a_arr).max(initial=0) >= GUARD:
        return [], False
    while t < m and t < n:
        found = False
        bv = 0
        bi = bj = 0
        for i in range(t, m):
            for j in range(t, n):
                v = a[i, j]
                if v != 0:
                    av = -v if v < 0 else v
                    if not found or av < bv:
                        found = True
                        bi = i
                        bj = j
                        bv = av
        if not found:
            break
        if bi != t:
            for j in range(t, n):
                x = a[t, j]; a[t, j] = a[bi, j]; a[bi, j] = x
        if bj != t:
            for i in range(t, m):
                x = a[i, t]; a[i, t] = a[i, bj]; a[i, bj] = x
        if a[t, t] < 0:
            for j in range(t, n):
                a[t, j] = -a[t, j]
        while True:
            p = a[t, t]
            dirty = False
            for i in range(t + 1, m):
                v = a[i, t]
                if v == 0:
                    continue
                q = v / p
                if v - q * p < 0:
                    q -= 1
                if q != 0:
                    for j in range(t, n):
                        x = a[i, j] - q * a[t, j]
                        if x >= GUARD or x <= -GUARD:
                            return [], False
                        a[i, j] = x
                if a[i, t] != 0:
                    for j in range(t, n):
                        x = a[t, j]; a[t, j] = a[i, j]; a[i, j] = x
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(t + 1, n):
                v = a[t, j]
                if v == 0:
                    continue
                q = v / p
                if v - q * p < 0:
                    q -= 1
                if q != 0:
                    for i in range(t, m):
                        x = a[i, j] - q * a[i, t]
                        if x >= GUARD or x <= -GUARD:
                            return [], False
                        a[i, j] = x
                if a[t, j] != 0:
                    for i in range(t, m):
                        x = a[i, t]; a[i, t] = a[i, j]; a[i, j] = x
                    dirty = True
                    break
            if not dirty:
                break
        diag.append(int(a[t, t]))
        t += 1
    return diag, True
