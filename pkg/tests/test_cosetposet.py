import numpy as np
import pytest

from oracles import (component_count_from_sets, containment_coset_poset,
                     euler_char_from_sets)

from cosetchi.cosetposet import (coset_poset, coset_poset_over_family,
                                 coset_poset_size, p_subgroup_poset,
                                 subgroup_poset, sylow_intersection_family)
from cosetchi.errors import PosetCapExceeded
from cosetchi.group import (all_sylow, alternating, cyclic, direct_product,
                            p_core, symmetric)
from cosetchi.poset import euler_char_mobius, mobius_from


def test_element_counts():
    assert coset_poset(symmetric(3), 2).size == 15  # 6 + 3*3
    S33 = direct_product(symmetric(3), symmetric(3))
    assert coset_poset(S33, 2).size == 387  # 36 + 15*18 + 9*9
    assert coset_poset_size(S33, 2) == 387
    assert coset_poset(symmetric(4), 2).size == 183


def test_intersection_family():
    a4 = alternating(4)
    fam = sylow_intersection_family(a4, 3)
    assert [H.order for H in fam.members] == [1, 3, 3, 3, 3]
    s4 = symmetric(4)
    fam = sylow_intersection_family(s4, 2)
    assert [H.order for H in fam.members] == [4, 8, 8, 8]
    assert fam.members[0] is p_core(s4, 2)
    closed = sylow_intersection_family(alternating(4), 2)
    assert len(closed.members) == 1  # single normal Sylow


@pytest.mark.parametrize("maker,p", [
    (lambda: symmetric(4), 2), (lambda: symmetric(5), 2),
    (lambda: alternating(5), 2), (lambda: alternating(4), 3),
])
def test_intersection_family_invariants(maker, p):
    from cosetchi.group import intersection

    G = maker()
    fam = sylow_intersection_family(G, p)
    sylows = all_sylow(G, p)
    members = set(fam.members)
    assert set(sylows) <= members
    # closed under pairwise intersection
    for H in members:
        for K in members:
            assert intersection(H, K) in members
    # every member is recovered as the intersection of the Sylows above it
    for H in members:
        above = [P for P in sylows if H.leq(P)]
        assert above
        meet = above[0]
        for P in above[1:]:
            meet = intersection(meet, P)
        assert meet is H
    assert min(members, key=lambda h: h.order) is p_core(G, p)


def test_family_coset_poset_of_sylow_intersections():
    s4 = symmetric(4)
    fam = sylow_intersection_family(s4, 2)
    P = coset_poset_over_family(s4, list(fam.members))
    assert P.size == 15  # 6 cosets of V_4 plus 3*3 Sylow cosets
    counts = P.chain_counts()
    assert counts == [15, 18]
    # same chi as the full coset poset: the homotopy-invariance proxy
    assert sum((-1) ** d * c for d, c in enumerate(counts)) == -3


def test_arbitrary_family_matches_mobius_formula():
    # all proper subgroups of S_3: chi by hand is
    # -(mu(1,G)*6 + 3*mu(C2,G)*3 + mu(C3,G)*2) = -(18 - 9 - 2) = -7,
    # and the complex has 17 vertices and 24 edges
    from cosetchi.chi import mobius_to_top
    from oracles import brute_force_subgroups

    G = symmetric(3)
    family = sorted(H for H in brute_force_subgroups(G, 2)
                    if H.order < G.order)
    assert [H.order for H in family] == [1, 2, 2, 2, 3]
    P = coset_poset_over_family(G, family)
    assert P.size == 17
    counts = P.chain_counts()
    assert counts == [17, 24]
    direct = sum((-1) ** d * c for d, c in enumerate(counts))
    mu = mobius_to_top(family + [G.full_subgroup])
    formula = -sum(mu[H] * (G.order // H.order) for H in family)
    assert direct == formula == -7


def test_family_must_be_proper():
    s3 = symmetric(3)
    with pytest.raises(ValueError):
        coset_poset_over_family(s3, [s3.full_subgroup])


def test_poset_cap():
    with pytest.raises(PosetCapExceeded):
        coset_poset(symmetric(4), 2, cap=100)


@pytest.mark.parametrize("maker,p", [
    (lambda: symmetric(3), 2), (lambda: cyclic(6), 3),
    (lambda: alternating(4), 2), (lambda: alternating(4), 3),
    (lambda: symmetric(4), 2), (lambda: cyclic(12), 2),
])
def test_order_relation_matches_set_containment(maker, p):
    G = maker()
    P = coset_poset(G, p)
    family = [G.trivial_subgroup] + list(p_subgroup_poset(G, p).members)
    oracle = containment_coset_poset(G, family)
    assert len(oracle) == P.size
    dense = P.to_poset()
    assert (dense.leq == np.array(oracle, dtype=bool)).all()
    for u in range(P.size):
        for v in range(P.size):
            assert P.leq(u, v) == oracle[u][v]


@pytest.mark.parametrize("maker,p", [
    (lambda: symmetric(3), 2), (lambda: cyclic(6), 3),
    (lambda: symmetric(4), 2), (lambda: alternating(4), 3),
])
def test_chain_counts_and_components_match_oracle(maker, p):
    G = maker()
    P = coset_poset(G, p)
    family = [G.trivial_subgroup] + list(p_subgroup_poset(G, p).members)
    counts = P.chain_counts()
    chi = sum((-1) ** d * c for d, c in enumerate(counts))
    assert chi == euler_char_from_sets(G, family)
    assert P.component_count() == component_count_from_sets(G, family)


def test_c2_s3_structure():
    P = coset_poset(symmetric(3), 2)
    assert P.chain_counts() == [15, 18]
    assert P.component_count() == 1
    K = P.order_complex()
    assert K.counts == [15, 18]
    assert K.dim == 1


def test_c3_c6_two_components():
    P = coset_poset(cyclic(6), 3)
    assert P.size == 8
    assert P.component_count() == 2


def test_p_not_dividing_order_gives_singletons():
    P = coset_poset(symmetric(3), 5)
    assert P.size == 6
    assert P.component_count() == 6
    assert P.chain_counts() == [6]


def test_mobius_on_subgroup_poset_example():
    # the 2-subgroup poset of S_3 with bounds adjoined: mu(1, G) = 2
    s3 = symmetric(3)
    handles = p_subgroup_poset(s3, 2).with_bounds_handles()
    P = subgroup_poset(handles)
    col = mobius_from(P, 0)  # handles[0] is the trivial subgroup
    assert col[len(handles) - 1] == 2


def test_coset_poset_mobius_pair_sum():
    # chi as the sum of Möbius values over all comparable pairs
    P = coset_poset(symmetric(3), 2).to_poset()
    assert euler_char_mobius(P) == -3


def test_deterministic_vertex_order():
    P1 = coset_poset(symmetric(4), 2)
    P2 = coset_poset(symmetric(4), 2)
    assert P1.successors_csr() == P2.successors_csr()
    assert P1.vertex_labels() == P2.vertex_labels()


def test_sylow_count_laws():
    S33 = direct_product(symmetric(3), symmetric(3))
    assert len(all_sylow(S33, 2)) == 9
