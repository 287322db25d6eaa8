"""Coset posets of subgroup families: the p-subgroup poset, the family of
Sylow intersections, and the poset of all right cosets over a family.

Inclusion of cosets is decided algebraically: Hx <= Ky iff H <= K and
x * y^-1 in K.  Vertices are canonical cosets (family index, minimal
representative), sorted by (family index, representative), and the family
itself is sorted by (order, element ids), so vertex ids form a linear
extension of the poset.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .complexes import DEFAULT_SIMPLEX_CAP, SimplicialComplex
from .errors import PosetCapExceeded
from .group import (FiniteGroup, SubgroupHandle, all_p_subgroups, all_sylow,
                    intersection, right_coset_representatives)
from .poset import Poset

DEFAULT_POSET_CAP = 200_000


@dataclass(frozen=True)
class PSubgroupPoset:
    """All non-trivial p-subgroups of a group, ordered by inclusion."""

    group: FiniteGroup
    prime: int
    members: tuple[SubgroupHandle, ...]

    def with_bounds_handles(self) -> list[SubgroupHandle]:
        """Members together with the trivial subgroup and the whole group.

        For a p-group the whole group is itself a member, so handles are
        deduplicated (interning makes this an identity check).
        """
        out = [self.group.trivial_subgroup, *self.members]
        if self.group.full_subgroup not in out:
            out.append(self.group.full_subgroup)
        return out


@dataclass(frozen=True)
class SylowIntersectionFamily:
    """All intersections of one or more Sylow p-subgroups."""

    group: FiniteGroup
    prime: int
    members: tuple[SubgroupHandle, ...]


def p_subgroup_poset(G: FiniteGroup, p: int) -> PSubgroupPoset:
    return PSubgroupPoset(G, p, tuple(all_p_subgroups(G, p)))


def sylow_intersection_family(G: FiniteGroup, p: int) -> SylowIntersectionFamily:
    """Close the Sylow p-subgroups under pairwise intersection.

    Pairwise closure reaches every s-fold intersection because each one is
    a pairwise intersection of a partial intersection with the next Sylow.
    """
    sylows = all_sylow(G, p)
    members = set(sylows)
    frontier = list(sylows)
    while frontier:
        new = []
        for H in frontier:
            for P in sylows:
                M = intersection(H, P)
                if M not in members:
                    members.add(M)
                    new.append(M)
        frontier = new
    return SylowIntersectionFamily(G, p, tuple(sorted(members)))


def subgroup_poset(handles: list[SubgroupHandle]) -> Poset:
    """Dense inclusion order on a list of subgroup handles (as labels)."""
    n = len(handles)
    leq = np.zeros((n, n), dtype=bool)
    for i, H in enumerate(handles):
        for j, K in enumerate(handles):
            leq[i, j] = H.mask & ~K.mask == 0
    return Poset(leq, labels=tuple(handles), validate=False)


class CosetPoset:
    """The poset of right cosets Hx for H ranging over a subgroup family."""

    def __init__(self, G: FiniteGroup, family: list[SubgroupHandle],
                 prime: int | None = None, cap: int = DEFAULT_POSET_CAP):
        self.group = G
        self.prime = prime
        self.family = tuple(sorted(set(family)))
        self.size = sum(G.order // H.order for H in self.family)
        if self.size > cap:
            raise PosetCapExceeded(
                f"coset poset has {self.size} elements, cap is {cap}")
        self._offsets: list[int] = []
        self._reps: list[list[int]] = []
        self._coset_index: list[list[int]] = []
        off = 0
        for H in self.family:
            rep_of, reps = right_coset_representatives(G, H)
            pos = {r: k for k, r in enumerate(reps)}
            self._offsets.append(off)
            self._reps.append(reps)
            self._coset_index.append([pos[r] for r in rep_of])
            off += len(reps)
        self._succ: tuple[list[int], list[int]] | None = None

    # -- vertex bookkeeping -------------------------------------------------

    def vertex(self, family_index: int, rep: int) -> int:
        return self._offsets[family_index] + self._coset_index[family_index][rep]

    def vertex_info(self, v: int) -> tuple[int, int]:
        """(family index, representative id) of a vertex."""
        fi = 0
        for k, off in enumerate(self._offsets):
            if off <= v:
                fi = k
        return fi, self._reps[fi][v - self._offsets[fi]]

    def vertex_labels(self) -> list[str]:
        """Deterministic labels: subgroup order and representative cycles."""
        out = []
        for fi, H in enumerate(self.family):
            for r in self._reps[fi]:
                cyc = self.group.element(r).cycle_string().replace(" ", ",")
                out.append(f"|H|={H.order} rep={cyc}")
        return out

    def leq(self, u: int, v: int) -> bool:
        """Coset inclusion, decided algebraically (never by set scan)."""
        fu, xu = self.vertex_info(u)
        fv, xv = self.vertex_info(v)
        H, K = self.family[fu], self.family[fv]
        if H.mask & ~K.mask:
            return False
        G = self.group
        return K.contains(G.mul(xu, G.inv(xv)))

    # -- order structure ------------------------------------------------------

    def successors_csr(self) -> tuple[list[int], list[int]]:
        """CSR adjacency of the full strict order.

        Each H-coset lies in exactly one K-coset per comparable pair H < K,
        so the edges are found by a single representative lookup; no
        quadratic scan over coset pairs is needed.
        """
        if self._succ is None:
            per_vertex: list[list[int]] = [[] for _ in range(self.size)]
            nf = len(self.family)
            for fi in range(nf):
                H = self.family[fi]
                for fj in range(fi + 1, nf):
                    K = self.family[fj]
                    if H.mask & ~K.mask:
                        continue
                    off_i, off_j = self._offsets[fi], self._offsets[fj]
                    cj = self._coset_index[fj]
                    for r, x in enumerate(self._reps[fi]):
                        per_vertex[off_i + r].append(off_j + cj[x])
            indptr = [0]
            indices: list[int] = []
            for adj in per_vertex:
                indices.extend(adj)
                indptr.append(len(indices))
            self._succ = (indptr, indices)
        return self._succ

    def chain_counts(self, cap: int = DEFAULT_SIMPLEX_CAP) -> list[int]:
        indptr, indices = self.successors_csr()
        return kernels.chain_counts(indptr, indices, cap)

    def order_complex(self, cap: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
        indptr, indices = self.successors_csr()
        return SimplicialComplex(kernels.enumerate_chains(indptr, indices, cap))

    def component_count(self) -> int:
        indptr, indices = self.successors_csr()
        parent = list(range(self.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u in range(self.size):
            for k in range(indptr[u], indptr[u + 1]):
                ru, rv = find(u), find(indices[k])
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
        return sum(1 for v in range(self.size) if find(v) == v)

    def to_poset(self) -> Poset:
        """Materialize the dense relation; intended for small posets only."""
        leq = np.eye(self.size, dtype=bool)
        indptr, indices = self.successors_csr()
        for u in range(self.size):
            for k in range(indptr[u], indptr[u + 1]):
                leq[u, indices[k]] = True
        labels = []
        for fi, H in enumerate(self.family):
            labels.extend((fi, r) for r in self._reps[fi])
        return Poset(leq, labels=tuple(labels), validate=True)

    def __repr__(self) -> str:
        return (f"CosetPoset(group={self.group.name or '?'}, "
                f"families={len(self.family)}, size={self.size})")


def coset_poset(G: FiniteGroup, p: int, cap: int = DEFAULT_POSET_CAP) -> CosetPoset:
    """The poset of all cosets Hx with H a p-subgroup or trivial."""
    family = [G.trivial_subgroup, *all_p_subgroups(G, p)]
    return CosetPoset(G, family, prime=p, cap=cap)


def coset_poset_over_family(G: FiniteGroup, family: list[SubgroupHandle],
                            cap: int = DEFAULT_POSET_CAP) -> CosetPoset:
    """The poset of all cosets over an explicit family of proper subgroups."""
    for H in family:
        if H.group is not G:
            raise ValueError("family member from a different ambient group")
        if H.order == G.order:
            raise ValueError("family members must be proper subgroups")
    return CosetPoset(G, family, prime=None, cap=cap)


def coset_poset_size(G: FiniteGroup, p: int) -> int:
    """Element count of the coset poset, computed arithmetically."""
    return G.order + sum(G.order // H.order for H in all_p_subgroups(G, p))
