"""Pure-Python kernels: the fallback twins of the compiled extension.

Same contracts and same outputs as cosetchi.kernels._speedups; selected at
import time when the extension is unavailable (or forced via COSETCHI_PURE).
"""

from __future__ import annotations

from ..errors import SimplexCapExceeded

HAS_FAST_SNF = False


def chain_counts(indptr, indices, cap: int) -> list[int]:
    """Number of chains per size in a strict order given as CSR adjacency.

    Entry d of the result is the number of chains with d+1 elements, i.e.
    the number of d-simplices of the order complex.  counts[v] below is the
    number of chains of the current size whose minimum is v.
    """
    n = len(indptr) - 1
    if n == 0:
        return []
    totals = [n]
    if n > cap:
        raise SimplexCapExceeded(f"simplex count exceeds cap {cap}")
    running = n
    cur = [1] * n
    while True:
        nxt = [0] * n
        level = 0
        for v in range(n):
            acc = 0
            for k in range(indptr[v], indptr[v + 1]):
                acc += cur[indices[k]]
            nxt[v] = acc
            level += acc
        if level == 0:
            return totals
        running += level
        if running > cap:
            raise SimplexCapExceeded(f"simplex count exceeds cap {cap}")
        totals.append(level)
        cur = nxt


def enumerate_chains(indptr, indices, cap: int) -> list[list[tuple[int, ...]]]:
    """All chains of a strict order (CSR adjacency), grouped by size.

    Chains are emitted in lexicographic order of their vertex tuples; each
    tuple lists the chain ascending in the order relation.
    """
    n = len(indptr) - 1
    out: list[list[tuple[int, ...]]] = []
    total = 0
    path = [0] * n
    pos = [0] * (n + 1)
    for v0 in range(n):
        depth = 0
        path[0] = v0
        pos[0] = indptr[v0]
        while depth >= 0:
            if depth + 1 > len(out):
                out.append([])
            if pos[depth] == indptr[path[depth]]:
                # first visit of this node: emit the current chain
                total += 1
                if total > cap:
                    raise SimplexCapExceeded(f"simplex count exceeds cap {cap}")
                out[depth].append(tuple(path[:depth + 1]))
            if pos[depth] < indptr[path[depth] + 1]:
                w = indices[pos[depth]]
                pos[depth] += 1
                path[depth + 1] = w
                pos[depth + 1] = indptr[w]
                depth += 1
            else:
                depth -= 1
    return out


def snf_diagonal_i64(matrix) -> tuple[list[int], bool]:
    """Pure twin of the compiled int64 Smith reduction.

    Works on a dense list-of-lists copy with Python integers, so it cannot
    overflow; the ok flag is always True.  Kept for benchmark parity; the
    sparse big-integer routine in cosetchi.snf is normally faster in pure
    mode and is what the library falls back to.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < m and t < n:
        best = None
        bv = 0
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < bv):
                    best, bv = (i, j), abs(v)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = a[i][t]
                if v == 0:
                    continue
                q = v // p
                if q:
                    rt = a[t]
                    a[i] = [x - q * y for x, y in zip(a[i], rt)]
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(t + 1, n):
                v = a[t][j]
                if v == 0:
                    continue
                q = v // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    dirty = True
                    break
            if not dirty:
                break
        diag.append(a[t][t])
        t += 1
    return diag, True
