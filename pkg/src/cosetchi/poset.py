"""Finite posets, Möbius functions, components, and poset products."""

from __future__ import annotations

from typing import Hashable, Sequence

import numpy as np


class Poset:
    """A finite poset given by a dense boolean relation table.

    leq[i, j] is True iff element i <= element j.  Construction checks
    reflexivity, antisymmetry and transitivity.
    """

    def __init__(self, leq: np.ndarray, labels: Sequence[Hashable] | None = None,
                 validate: bool = True):
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise ValueError("relation table must be square")
        self.leq = leq
        self.size = n
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise ValueError("label count must match size")
        if validate:
            self._validate()

    def _validate(self) -> None:
        leq, n = self.leq, self.size
        if n == 0:
            return
        if not leq.diagonal().all():
            raise ValueError("relation is not reflexive")
        both = leq & leq.T
        if (both != np.eye(n, dtype=bool)).any():
            raise ValueError("relation is not antisymmetric")
        # float matmul is exact here (counts < 2**24) and much faster than
        # object or uint8 paths for mid-sized posets
        reach = (leq.astype(np.float32) @ leq.astype(np.float32)) > 0
        if (reach & ~leq).any():
            raise ValueError("relation is not transitive")

    def less(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j]) and i != j

    def strict_successors(self, i: int) -> list[int]:
        row = self.leq[i].copy()
        row[i] = False
        return np.flatnonzero(row).tolist()

    def comparable_pairs(self) -> list[tuple[int, int]]:
        """All ordered pairs (i, j) with i <= j, including the diagonal."""
        ii, jj = np.nonzero(self.leq)
        return list(zip(ii.tolist(), jj.tolist()))

    def linear_extension(self) -> list[int]:
        """Element ids ordered so that x < y implies x comes first."""
        below = self.leq.sum(axis=0)
        return sorted(range(self.size), key=lambda i: (below[i], i))

    def with_bounds(self) -> tuple["Poset", int, int]:
        """Adjoin a fresh bottom and top; returns (poset, bottom_id, top_id)."""
        n = self.size
        leq = np.zeros((n + 2, n + 2), dtype=bool)
        leq[:n, :n] = self.leq
        leq[n, :] = True  # new bottom below everything
        leq[:, n + 1] = True  # new top above everything
        leq[n + 1, n] = False
        leq[n, n] = leq[n + 1, n + 1] = True
        labels = self.labels + ("__bottom__", "__top__")
        return Poset(leq, labels, validate=False), n, n + 1

    def __repr__(self) -> str:
        return f"Poset(size={self.size})"


class MobiusTable:
    """Möbius values on all comparable pairs of a poset."""

    def __init__(self, poset: Poset, entries: dict[tuple[int, int], int]):
        self.poset = poset
        self.entries = entries

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.entries[pair]

    def __len__(self) -> int:
        return len(self.entries)


def mobius(P: Poset) -> MobiusTable:
    """Möbius function of a poset by interval recursion.

    For each x the values mu(x, y) are filled along a linear extension via
    mu(x, y) = -sum_{x <= z < y} mu(x, z), with mu(x, x) = 1.
    """
    ext = P.linear_extension()
    leq = P.leq
    entries: dict[tuple[int, int], int] = {}
    for x in range(P.size):
        vals: dict[int, int] = {x: 1}
        entries[(x, x)] = 1
        for y in ext:
            if y == x or not leq[x, y]:
                continue
            total = 0
            for z, mz in vals.items():
                if leq[z, y] and z != y:
                    total += mz
            vals[y] = -total
            entries[(x, y)] = -total
    return MobiusTable(P, entries)


def mobius_from(P: Poset, x: int) -> dict[int, int]:
    """Values mu(x, y) for every y >= x, filled along a linear extension."""
    leq = P.leq
    vals: dict[int, int] = {x: 1}
    for y in P.linear_extension():
        if y == x or not leq[x, y]:
            continue
        vals[y] = -sum(mz for z, mz in vals.items() if leq[z, y] and z != y)
    return vals


def euler_char_mobius(P: Poset) -> int:
    """Euler characteristic as the sum of Möbius values over comparable pairs."""
    table = mobius(P)
    return sum(table.entries.values())


def connected_components(P: Poset) -> list[list[int]]:
    """Components of the comparability graph, each sorted, ordered by minimum."""
    n = P.size
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ii, jj = np.nonzero(P.leq)
    for i, j in zip(ii.tolist(), jj.tolist()):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def poset_product(P: Poset, Q: Poset) -> Poset:
    """Cartesian product with componentwise order; (i, j) -> i * |Q| + j."""
    leq = np.kron(P.leq.astype(np.uint8), Q.leq.astype(np.uint8)).astype(bool)
    labels = tuple((a, b) for a in P.labels for b in Q.labels)
    return Poset(leq, labels, validate=False)
