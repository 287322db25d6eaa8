"""Finite permutation groups: enumeration, subgroups, and Sylow machinery.

A FiniteGroup is the full element set of a permutation group, enumerated
and sorted lexicographically by image tuple.  Every subgroup is interned
in a per-group registry keyed by its sorted element-id tuple, so handle
equality is identity and repeated constructions are free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (AmbientMismatch, ConsistencyError, EnumerationCapExceeded,
                     NotNormal)
from .perm import Permutation

DEFAULT_ENUMERATION_CAP = 100_000

# Full multiplication tables are only built for groups this small; beyond
# that, products are composed per call through the element index.
_MULT_TABLE_MAX_ORDER = 2048
_MULT_TABLE_MAX_DEGREE = 48


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def p_prime_part(n: int, p: int) -> int:
    return n // p_part(n, p)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteGroup:
    """A finite permutation group with a fixed element enumeration.

    Elements are addressed by integer id; id 0 is always the identity
    because the identity image tuple is lexicographically minimal.
    """

    def __init__(self, degree: int, images: Sequence[tuple[int, ...]],
                 generator_ids: Sequence[int], name: str = ""):
        self.degree = degree
        self.images = tuple(images)
        self.order = len(self.images)
        self.generator_ids = tuple(generator_ids)
        self.name = name
        self.index = {img: i for i, img in enumerate(self.images)}
        inv = []
        for img in self.images:
            buf = [0] * degree
            for i, x in enumerate(img):
                buf[x] = i
            inv.append(self.index[tuple(buf)])
        self.inverse_ids = tuple(inv)
        self._table: np.ndarray | None = None
        if self.order <= _MULT_TABLE_MAX_ORDER and degree <= _MULT_TABLE_MAX_DEGREE:
            self._table = self._build_table()
        self._registry: dict[tuple[int, ...], SubgroupHandle] = {}
        self._order_cache: dict[int, int] = {}
        self._trivial = self.intern_subgroup((0,), ())
        self._full = self.intern_subgroup(range(self.order), self.generator_ids)

    def _build_table(self) -> np.ndarray:
        n, idx = self.order, self.index
        table = np.empty((n, n), dtype=np.int32)
        for i, gi in enumerate(self.images):
            row = table[i]
            for j, gj in enumerate(self.images):
                row[j] = idx[tuple(gj[x] for x in gi)]
        return table

    # -- element arithmetic ------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        """Id of elements[i] * elements[j] (apply i first, then j)."""
        if self._table is not None:
            return int(self._table[i, j])
        gi, gj = self.images[i], self.images[j]
        return self.index[tuple(gj[x] for x in gi)]

    def inv(self, i: int) -> int:
        return self.inverse_ids[i]

    def conj(self, h: int, g: int) -> int:
        """Id of g^-1 * h * g."""
        return self.mul(self.mul(self.inverse_ids[g], h), g)

    def element(self, i: int) -> Permutation:
        return Permutation(self.images[i])

    @property
    def elements(self) -> list[Permutation]:
        return [Permutation(img) for img in self.images]

    @property
    def generators(self) -> list[Permutation]:
        return [self.element(i) for i in self.generator_ids]

    def element_order(self, i: int) -> int:
        cached = self._order_cache.get(i)
        if cached is None:
            k, x = 1, i
            while x != 0:
                x = self.mul(x, i)
                k += 1
            cached = self._order_cache[i] = k
        return cached

    def is_p_element(self, i: int, p: int) -> bool:
        o = self.element_order(i)
        return o > 1 and p_part(o, p) == o

    # -- subgroups ---------------------------------------------------------

    def intern_subgroup(self, ids: Iterable[int], gen_ids: Iterable[int] | None = None
                        ) -> "SubgroupHandle":
        key = tuple(sorted(set(int(i) for i in ids)))
        handle = self._registry.get(key)
        if handle is None:
            mask = 0
            for i in key:
                mask |= 1 << i
            handle = SubgroupHandle(self, key, mask,
                                    tuple(gen_ids) if gen_ids is not None else None)
            self._registry[key] = handle
        return handle

    @property
    def trivial_subgroup(self) -> "SubgroupHandle":
        return self._trivial

    @property
    def full_subgroup(self) -> "SubgroupHandle":
        return self._full

    def p_part_of_order(self, p: int) -> int:
        return p_part(self.order, p)

    def p_prime_part_of_order(self, p: int) -> int:
        return p_prime_part(self.order, p)

    def is_p_group(self, p: int) -> bool:
        return self.order == p_part(self.order, p)

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"FiniteGroup({label}, degree={self.degree}, order={self.order})"


class SubgroupHandle:
    """Canonical interned subgroup: sorted element-id tuple plus a bitmask.

    Handles compare equal iff their element-id tuples are equal; interning
    makes that pointer equality in practice.
    """

    __slots__ = ("group", "element_ids", "mask", "_gen_ids")

    def __init__(self, group: FiniteGroup, element_ids: tuple[int, ...],
                 mask: int, gen_ids: tuple[int, ...] | None):
        self.group = group
        self.element_ids = element_ids
        self.mask = mask
        self._gen_ids = gen_ids

    @property
    def order(self) -> int:
        return len(self.element_ids)

    def contains(self, eid: int) -> bool:
        return bool(self.mask >> eid & 1)

    def leq(self, other: "SubgroupHandle") -> bool:
        if other.group is not self.group:
            raise AmbientMismatch("subgroups of different ambient groups")
        return self.mask & ~other.mask == 0

    def generator_ids(self) -> tuple[int, ...]:
        """A small generating set, computed greedily on first use."""
        if self._gen_ids is None:
            gens: list[int] = []
            span = {0}
            for eid in self.element_ids:
                if eid not in span:
                    gens.append(eid)
                    span = set(_close_ids(self.group, gens))
                    if len(span) == self.order:
                        break
            self._gen_ids = tuple(gens)
        return self._gen_ids

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubgroupHandle) and other.group is self.group
                and other.element_ids == self.element_ids)

    def __hash__(self) -> int:
        return hash(self.element_ids)

    def __lt__(self, other: "SubgroupHandle") -> bool:
        return (self.order, self.element_ids) < (other.order, other.element_ids)

    def __repr__(self) -> str:
        return f"SubgroupHandle(order={self.order} of {self.group!r})"


@dataclass(frozen=True)
class Coset:
    """Right coset Hx in canonical form: minimal element id as representative."""

    subgroup: SubgroupHandle
    representative: int

    def element_ids(self) -> tuple[int, ...]:
        G = self.subgroup.group
        return tuple(sorted(G.mul(h, self.representative)
                            for h in self.subgroup.element_ids))


# -- construction ---------------------------------------------------------


def generate_group(degree: int, generators: Iterable[Permutation],
                   cap: int = DEFAULT_ENUMERATION_CAP, name: str = "") -> FiniteGroup:
    """Close a generating set under composition and enumerate the group.

    The element order is lexicographic on image tuples, which makes the
    enumeration (and everything downstream, e.g. coset representatives)
    deterministic across runs and platforms.
    """
    gens = []
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
        gens.append(g.images)
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(g[v] for v in x)
                if y not in seen:
                    if len(seen) >= cap:
                        raise EnumerationCapExceeded(
                            f"group closure exceeded cap {cap}")
                    seen.add(y)
                    new.append(y)
        frontier = new
    images = sorted(seen)
    group = FiniteGroup(degree, images, [images.index(g) for g in gens], name=name)
    return group


def _close_ids(G: FiniteGroup, gen_ids: Iterable[int]) -> list[int]:
    """Element ids of the subgroup generated by gen_ids."""
    gens = [g for g in gen_ids if g != 0]
    seen = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return sorted(seen)


def subgroup_generate(G: FiniteGroup, gen_ids: Iterable[int]) -> SubgroupHandle:
    gen_ids = tuple(gen_ids)
    return G.intern_subgroup(_close_ids(G, gen_ids), gen_ids)


def conjugate_subgroup(H: SubgroupHandle, g: int) -> SubgroupHandle:
    G = H.group
    return G.intern_subgroup((G.conj(h, g) for h in H.element_ids),
                             tuple(G.conj(h, g) for h in H.generator_ids()))


def intersection(H: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    if H.group is not K.group:
        raise AmbientMismatch("subgroups of different ambient groups")
    mask = H.mask & K.mask
    ids = [i for i in H.element_ids if mask >> i & 1]
    return H.group.intern_subgroup(ids)


def normalizer(G: FiniteGroup, H: SubgroupHandle) -> SubgroupHandle:
    if H.group is not G:
        raise AmbientMismatch("subgroup of a different ambient group")
    gens = H.generator_ids()
    ids = [g for g in range(G.order)
           if all(H.contains(G.conj(h, g)) for h in gens)]
    return G.intern_subgroup(ids)


def right_coset_representatives(G: FiniteGroup, H: SubgroupHandle
                                ) -> tuple[list[int], list[int]]:
    """Return (rep_of, reps): rep_of[g] is the minimal element of Hg.

    Scanning ids in increasing order guarantees the first unseen element of
    each coset is its minimum, so reps come out sorted.
    """
    rep_of = [-1] * G.order
    reps = []
    for g in range(G.order):
        if rep_of[g] >= 0:
            continue
        reps.append(g)
        for h in H.element_ids:
            rep_of[G.mul(h, g)] = g
    return rep_of, reps


def right_cosets(G: FiniteGroup, H: SubgroupHandle) -> list[Coset]:
    _, reps = right_coset_representatives(G, H)
    return [Coset(H, r) for r in reps]


def coset_of(H: SubgroupHandle, x: int) -> Coset:
    G = H.group
    return Coset(H, min(G.mul(h, x) for h in H.element_ids))


# -- Sylow machinery -------------------------------------------------------


def sylow_subgroup(G: FiniteGroup, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup, found by normalizer ascent from a cyclic p-subgroup.

    Any p-subgroup P with |P| < |G|_p has p-elements in N_G(P) \\ P, and
    adjoining one gives a strictly larger p-subgroup, so the ascent always
    reaches the full p-part.  If p does not divide |G| the trivial subgroup
    is returned.
    """
    target = G.p_part_of_order(p)
    if target == 1:
        return G.trivial_subgroup
    seed = next(g for g in range(G.order) if G.is_p_element(g, p))
    P = subgroup_generate(G, (seed,))
    while P.order < target:
        N = normalizer(G, P)
        ext = next(g for g in N.element_ids
                   if G.is_p_element(g, p) and not P.contains(g))
        P = subgroup_generate(G, P.generator_ids() + (ext,))
    return P


def all_sylow(G: FiniteGroup, p: int) -> list[SubgroupHandle]:
    """The full conjugacy orbit of a Sylow p-subgroup, canonically sorted."""
    P = sylow_subgroup(G, p)
    seen = {}
    for g in range(G.order):
        Q = conjugate_subgroup(P, g)
        seen[Q.element_ids] = Q
    return sorted(seen.values())


def p_core(G: FiniteGroup, p: int) -> SubgroupHandle:
    """The largest normal p-subgroup: intersection of all Sylow p-subgroups."""
    sylows = all_sylow(G, p)
    core = sylows[0]
    for Q in sylows[1:]:
        core = intersection(core, Q)
    return core


def is_p_closed(G: FiniteGroup, p: int) -> bool:
    return len(all_sylow(G, p)) == 1


def is_p_ti(G: FiniteGroup, p: int) -> bool:
    """True iff distinct Sylow p-subgroups pairwise intersect trivially."""
    sylows = all_sylow(G, p)
    for i, P in enumerate(sylows):
        for Q in sylows[i + 1:]:
            if intersection(P, Q).order > 1:
                return False
    return True


def all_p_subgroups(G: FiniteGroup, p: int) -> list[SubgroupHandle]:
    """Every non-trivial p-subgroup, canonically sorted.

    Enumerates all subgroups of each Sylow p-subgroup by breadth-first
    closure (adjoin one element at a time), then deduplicates across the
    Sylow orbit via the interning registry.
    """
    found: set[SubgroupHandle] = set()
    for P in all_sylow(G, p):
        if P.order == 1:
            continue
        level = {G.trivial_subgroup}
        known = {G.trivial_subgroup}
        while level:
            nxt = set()
            for H in level:
                for x in P.element_ids:
                    if H.contains(x):
                        continue
                    K = subgroup_generate(G, H.generator_ids() + (x,))
                    if K not in known:
                        known.add(K)
                        nxt.add(K)
            level = nxt
        found.update(H for H in known if H.order > 1)
    return sorted(found)


# -- products and quotients -------------------------------------------------


def direct_product(G1: FiniteGroup, G2: FiniteGroup,
                   cap: int = DEFAULT_ENUMERATION_CAP, name: str = "") -> FiniteGroup:
    """Permutation group on deg(G1)+deg(G2) points, factors acting on blocks."""
    d1, d2 = G1.degree, G2.degree
    gens = []
    for i in G1.generator_ids:
        img = G1.images[i]
        gens.append(Permutation(tuple(img) + tuple(range(d1, d1 + d2))))
    for j in G2.generator_ids:
        img = G2.images[j]
        gens.append(Permutation(tuple(range(d1)) + tuple(x + d1 for x in img)))
    if not name:
        name = f"{G1.name or 'G1'}x{G2.name or 'G2'}"
    G = generate_group(d1 + d2, gens, cap=cap, name=name)
    if G.order != G1.order * G2.order:
        raise ConsistencyError(
            f"product order {G.order} != {G1.order} * {G2.order}")
    return G


def quotient_group(G: FiniteGroup, N: SubgroupHandle,
                   cap: int = DEFAULT_ENUMERATION_CAP
                   ) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient G/N via the right-multiplication action on cosets of N.

    Returns the quotient group (degree = index of N) together with the
    element map sending each id of G to the id of its image in G/N.
    """
    if N.group is not G:
        raise AmbientMismatch("subgroup of a different ambient group")
    for g in G.generator_ids:
        if conjugate_subgroup(N, g).mask != N.mask:
            raise NotNormal("quotient by a non-normal subgroup")
    rep_of, reps = right_coset_representatives(G, N)
    pos = {r: k for k, r in enumerate(reps)}
    k = len(reps)

    def action(g: int) -> tuple[int, ...]:
        return tuple(pos[rep_of[G.mul(r, g)]] for r in reps)

    gens = [Permutation(action(g)) for g in G.generator_ids]
    Q = generate_group(k, gens, cap=cap, name=f"{G.name or 'G'}/N")
    if Q.order * N.order != G.order:
        raise NotNormal("coset action order mismatch; N is not normal")
    qmap = tuple(Q.index[action(g)] for g in range(G.order))
    return Q, qmap


# -- catalog constructors ---------------------------------------------------


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("need n >= 1")
    gens = []
    if n >= 2:
        gens.append(Permutation([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(Permutation(list(range(1, n)) + [0]))
    return generate_group(n, gens, name=f"S({n})")


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("need n >= 1")
    gens = []
    for k in range(2, n):
        images = list(range(n))
        images[0], images[1], images[k] = 1, k, 0
        gens.append(Permutation(images))
    return generate_group(n, gens, name=f"A({n})")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("need n >= 1")
    gens = [] if n == 1 else [Permutation(list(range(1, n)) + [0])]
    return generate_group(n, gens, name=f"C({n})")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on the n vertices of a polygon."""
    if n < 3:
        raise ValueError("dihedral constructor needs n >= 3")
    rot = Permutation(list(range(1, n)) + [0])
    ref = Permutation([(n - i) % n for i in range(n)])
    return generate_group(n, [rot, ref], name=f"D({n})")


def quaternion8() -> FiniteGroup:
    """The order-8 quaternion group in its regular representation (degree 8).

    Points are the elements 1, -1, i, -i, j, -j, k, -k in that order; the
    generators are right translation by i and by j.
    """
    r_i = Permutation([2, 3, 1, 0, 7, 6, 4, 5])
    r_j = Permutation([4, 5, 6, 7, 1, 0, 3, 2])
    return generate_group(8, [r_i, r_j], name="Q8")


def frobenius21() -> FiniteGroup:
    """The non-abelian group of order 21 acting on 7 points."""
    a = Permutation([1, 2, 3, 4, 5, 6, 0])
    b = Permutation([0, 2, 4, 6, 1, 3, 5])  # x -> 2x mod 7
    return generate_group(7, [a, b], name="F21")
