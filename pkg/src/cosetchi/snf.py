"""Smith normal form of integer matrices.

Two routes with one contract:

* a compiled dense int64 reduction (fast path) that aborts whenever any
  intermediate magnitude reaches 2**31, and
* a sparse arbitrary-precision reduction (always correct, always available).

The fast path's abort-and-fallback keeps results exact in all cases.  Both
routes pick minimal-absolute-value pivots to slow coefficient growth; the
sparse route additionally weighs Markowitz fill.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

from . import kernels

_DENSE_CELL_LIMIT = 2_000_000


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... (positive; zeros dropped)."""

    shape: tuple[int, int]
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _fix_divisibility(values: Sequence[int]) -> list[int]:
    """Turn a positive diagonal into the canonical divisibility chain."""
    vals = sorted(abs(v) for v in values if v != 0)
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if vals[j] % vals[i]:
                    g = gcd(vals[i], vals[j])
                    vals[i], vals[j] = g, vals[i] * vals[j] // g
                    changed = True
        if changed:
            vals.sort()
    return vals


def invariant_factors_sparse(entries: Mapping[tuple[int, int], int],
                             nrows: int, ncols: int) -> list[int]:
    """Arbitrary-precision sparse diagonalization; the authoritative route."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = int(v)
            cols.setdefault(j, set()).add(i)

    def drop(i: int, j: int) -> None:
        del rows[i][j]
        if not rows[i]:
            del rows[i]
        cols[j].discard(i)
        if not cols[j]:
            del cols[j]

    def put(i: int, j: int, v: int) -> None:
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)
        elif i in rows and j in rows[i]:
            drop(i, j)

    def row_axpy(dst: int, src: int, q: int) -> None:
        # rows[dst] -= q * rows[src]
        for j, v in list(rows.get(src, {}).items()):
            put(dst, j, rows.get(dst, {}).get(j, 0) - q * v)

    def col_axpy(dst: int, src: int, q: int) -> None:
        for i in list(cols.get(src, set())):
            v = rows[i][src]
            put(i, dst, rows.get(i, {}).get(dst, 0) - q * v)

    diag: list[int] = []
    while rows:
        best = None
        best_key = None
        for i, row in rows.items():
            nr = len(row)
            for j, v in row.items():
                av = abs(v)
                key = (av != 1, (nr - 1) * (len(cols[j]) - 1), av, i, j)
                if best_key is None or key < best_key:
                    best, best_key = (i, j), key
        pi, pj = best  # type: ignore[misc]
        while True:
            p = rows[pi][pj]
            if p < 0:
                for j, v in list(rows[pi].items()):
                    rows[pi][j] = -v
                p = -p
            dirty = False
            for i in list(cols[pj]):
                if i == pi:
                    continue
                v = rows[i][pj]
                q = v // p
                if q:
                    row_axpy(i, pi, q)
                if pj in rows.get(i, {}):
                    pi = i  # smaller positive remainder becomes the pivot
                    dirty = True
                    break
            if dirty:
                continue
            for j in list(rows[pi].keys()):
                if j == pj:
                    continue
                v = rows[pi][j]
                q = v // p
                if q:
                    col_axpy(j, pj, q)
                if j in rows.get(pi, {}):
                    pj = j
                    dirty = True
                    break
            if not dirty:
                break
        diag.append(abs(rows[pi][pj]))
        drop(pi, pj)
    return _fix_divisibility(diag)


def invariant_factors(entries: Mapping[tuple[int, int], int],
                      nrows: int, ncols: int) -> list[int]:
    """Invariant factors via the fast path when possible, else exact sparse."""
    if not entries:
        return []
    if (kernels.HAS_FAST_SNF and 0 < nrows * ncols <= _DENSE_CELL_LIMIT
            and all(-2**31 < v < 2**31 for v in entries.values())):
        dense = [[0] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            dense[i][j] = int(v)
        diag, ok = kernels.snf_diagonal_i64(dense)
        if ok:
            return _fix_divisibility(diag)
    return invariant_factors_sparse(entries, nrows, ncols)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form of a dense integer matrix."""
    rows = [list(map(int, row)) for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    entries = {(i, j): v for i, row in enumerate(rows)
               for j, v in enumerate(row) if v}
    factors = invariant_factors(entries, nrows, ncols)
    return SmithForm((nrows, ncols), tuple(factors))
