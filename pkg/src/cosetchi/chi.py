"""Euler characteristics of coset posets of p-subgroups, three ways.

* a Möbius sum over all non-trivial p-subgroups plus the trivial subgroup,
* a Möbius sum over the family of Sylow intersections,
* a direct alternating simplex count of the order complex,

plus the p-local quotient chi / |G|_p', the trivial-intersection closed
form, the minimal Sylow-intersection index, and the congruence and
component-count checks built on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosetposet import (DEFAULT_POSET_CAP, coset_poset, p_subgroup_poset,
                         sylow_intersection_family)
from .complexes import DEFAULT_SIMPLEX_CAP
from .errors import DivisibilityViolation, NotPTI, PClosedNoPairs
from .group import (FiniteGroup, SubgroupHandle, all_sylow, intersection,
                    is_p_closed, is_p_ti)


def mobius_to_top(handles: list[SubgroupHandle]) -> dict[SubgroupHandle, int]:
    """Möbius values mu(H, G) in the inclusion order on the given handles.

    The last handle must be the unique maximum.  Uses the dual convolution
    mu(H, top) = -sum_{H < K <= top} mu(K, top), filling in decreasing order
    of subgroup size (H < K forces |H| < |K|).
    """
    top = handles[-1]
    if any(H.mask & ~top.mask for H in handles):
        raise ValueError("last handle must contain every other handle")
    by_size = sorted(handles, key=lambda H: -H.order)
    mu: dict[SubgroupHandle, int] = {top: 1}
    for H in by_size:
        if H is top:
            continue
        total = 0
        for K, mk in mu.items():
            if H is not K and H.mask & ~K.mask == 0:
                total += mk
        mu[H] = -total
    return mu


def chi_via_subgroup_mobius(G: FiniteGroup, p: int) -> int:
    """chi of the coset poset from the Möbius sum over all p-subgroups.

    For a p-group (the whole group included as a coset makes the poset a
    cone) the value is 1; otherwise
    chi = -sum_H mu(H, G) |G : H| over the non-trivial p-subgroups and the
    trivial subgroup, with mu taken in that poset extended by G.
    """
    if G.is_p_group(p):
        return 1
    handles = p_subgroup_poset(G, p).with_bounds_handles()
    mu = mobius_to_top(handles)
    return -sum(mu[H] * (G.order // H.order) for H in handles[:-1])


def chi_via_sylow_intersections(G: FiniteGroup, p: int) -> int:
    """chi from the Möbius sum over the Sylow-intersection family.

    Returns 1 for p-groups so both formula routes share a domain.
    """
    if G.is_p_group(p):
        return 1
    members = sylow_intersection_family(G, p).members
    handles = [*members, G.full_subgroup]
    mu = mobius_to_top(handles)
    return -sum(mu[H] * (G.order // H.order) for H in members)


def chi_direct(G: FiniteGroup, p: int, poset_cap: int = DEFAULT_POSET_CAP,
               simplex_cap: int = DEFAULT_SIMPLEX_CAP) -> int:
    """chi by counting chains of the coset poset; the brute-force oracle."""
    counts = coset_poset(G, p, cap=poset_cap).chain_counts(cap=simplex_cap)
    return sum((-1) ** d * c for d, c in enumerate(counts))


def p_local_chi(G: FiniteGroup, p: int) -> int:
    """chi divided by the p'-part of |G|; exact divisibility is enforced."""
    chi = chi_via_sylow_intersections(G, p)
    part = G.p_prime_part_of_order(p)
    if chi % part:
        raise DivisibilityViolation(
            f"chi={chi} not divisible by |G|_p'={part}; this is a bug")
    return chi // part


def chi_ti_closed_form(G: FiniteGroup, p: int) -> int:
    """Closed form s |G|_p' - (s-1) |G| for groups with pairwise trivial
    Sylow intersections (s = number of Sylow p-subgroups)."""
    if not is_p_ti(G, p):
        raise NotPTI("Sylow p-subgroups do not intersect pairwise trivially")
    s = len(all_sylow(G, p))
    return s * G.p_prime_part_of_order(p) - (s - 1) * G.order


def min_sylow_intersection_index(G: FiniteGroup, p: int) -> tuple[int, int]:
    """(d, p**d) with p**d the minimal index |P : P n Q| over distinct
    Sylow pairs; needs at least two Sylow p-subgroups."""
    sylows = all_sylow(G, p)
    if len(sylows) < 2:
        raise PClosedNoPairs("a p-closed group has no distinct Sylow pairs")
    best = min(P.order // intersection(P, Q).order
               for i, P in enumerate(sylows) for Q in sylows[i + 1:])
    d = 0
    value = best
    while value % p == 0:
        value //= p
        d += 1
    if value != 1 or d == 0:
        raise DivisibilityViolation(
            f"minimal Sylow intersection index {best} is not a power of {p}")
    return d, best


@dataclass(frozen=True)
class CongruenceReport:
    """chi_p against 1 modulo p**d and modulo p, plus the Sylow-count law."""

    prime: int
    d: int
    p_d: int
    chi_p: int
    sylow_count: int
    ok_mod_p_d: bool
    ok_mod_p: bool
    sylow_count_ok: bool


def congruence_check(G: FiniteGroup, p: int) -> CongruenceReport:
    d, p_d = min_sylow_intersection_index(G, p)
    chi_p = p_local_chi(G, p)
    s = len(all_sylow(G, p))
    return CongruenceReport(
        prime=p, d=d, p_d=p_d, chi_p=chi_p, sylow_count=s,
        ok_mod_p_d=(chi_p - 1) % p_d == 0,
        ok_mod_p=(chi_p - 1) % p == 0,
        sylow_count_ok=(s - 1) % p_d == 0,
    )


@dataclass(frozen=True)
class ComponentReport:
    """Component count of the coset poset against the p'-part of |G|."""

    component_count: int
    p_prime_part: int
    p_closed: bool
    law_ok: bool


def component_count_check(G: FiniteGroup, p: int,
                          poset_cap: int = DEFAULT_POSET_CAP) -> ComponentReport:
    count = coset_poset(G, p, cap=poset_cap).component_count()
    part = G.p_prime_part_of_order(p)
    closed = is_p_closed(G, p)
    ok = (count == part) if closed else (count < part)
    return ComponentReport(count, part, closed, ok)


def is_power_of(value: int, p: int) -> bool:
    if value < 1:
        return False
    while value % p == 0:
        value //= p
    return value == 1


__all__ = [
    "mobius_to_top", "chi_via_subgroup_mobius", "chi_via_sylow_intersections",
    "chi_direct", "p_local_chi", "chi_ti_closed_form",
    "min_sylow_intersection_index", "congruence_check", "CongruenceReport",
    "component_count_check", "ComponentReport", "is_power_of",
]
