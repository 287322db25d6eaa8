import pytest

from cosetchi.chi import (chi_direct, chi_ti_closed_form,
                          chi_via_subgroup_mobius, chi_via_sylow_intersections,
                          component_count_check, congruence_check,
                          min_sylow_intersection_index, p_local_chi)
from cosetchi.errors import NotPTI, PClosedNoPairs
from cosetchi.group import (alternating, cyclic, dihedral, direct_product,
                            frobenius21, quaternion8, symmetric)
from cosetchi.groupio import parse_group_expression


def all_three(G, p):
    a = chi_via_subgroup_mobius(G, p)
    b = chi_via_sylow_intersections(G, p)
    c = chi_direct(G, p)
    assert a == b == c
    return a


def test_s3_chi_is_minus_three():
    assert all_three(symmetric(3), 2) == -3


def test_p_groups_have_chi_one():
    for G in (dihedral(4), quaternion8(), cyclic(9), cyclic(16)):
        p = 2 if G.order % 2 == 0 else 3
        assert all_three(G, p) == 1


def test_p_not_dividing_order_gives_group_order():
    assert all_three(symmetric(3), 5) == 6
    assert all_three(cyclic(4), 3) == 4


def test_a4_at_3():
    a4 = alternating(4)
    assert all_three(a4, 3) == -20
    assert chi_ti_closed_form(a4, 3) == 4 * 4 - 3 * 12 == -20
    assert p_local_chi(a4, 3) == -5


def test_s4_at_2_matches_quotient():
    s4 = symmetric(4)
    assert all_three(s4, 2) == -3
    assert p_local_chi(s4, 2) == -1 == p_local_chi(symmetric(3), 2)


def test_s3xs3_reproduces_p_prime_part():
    G, _ = parse_group_expression("S(3)xS(3)")
    assert all_three(G, 2) == 9 == G.p_prime_part_of_order(2)


def test_c6_at_3():
    assert all_three(cyclic(6), 3) == 2


def test_ti_closed_form_examples():
    assert chi_ti_closed_form(symmetric(3), 2) == 3 * 3 - 2 * 6 == -3
    assert chi_ti_closed_form(alternating(4), 2) == 3  # p-closed: s = 1
    with pytest.raises(NotPTI):
        chi_ti_closed_form(symmetric(4), 2)


def test_p_local_chi_examples():
    assert p_local_chi(symmetric(3), 2) == -1
    assert p_local_chi(alternating(4), 2) == 1  # p-closed
    assert p_local_chi(frobenius21(), 7) == 1
    assert p_local_chi(frobenius21(), 3) == -11
    assert p_local_chi(alternating(5), 2) == -11


def test_min_sylow_intersection_index():
    assert min_sylow_intersection_index(symmetric(3), 2) == (1, 2)
    assert min_sylow_intersection_index(symmetric(4), 2) == (1, 2)
    assert min_sylow_intersection_index(alternating(4), 3) == (1, 3)
    assert min_sylow_intersection_index(alternating(5), 2) == (2, 4)
    with pytest.raises(PClosedNoPairs):
        min_sylow_intersection_index(alternating(4), 2)


def test_congruence_reports():
    rep = congruence_check(symmetric(3), 2)
    assert rep.chi_p == -1 and rep.p_d == 2
    assert rep.ok_mod_p_d and rep.ok_mod_p and rep.sylow_count_ok
    rep = congruence_check(alternating(4), 3)
    assert rep.chi_p == -5 and rep.p_d == 3 and rep.ok_mod_p_d
    rep = congruence_check(alternating(5), 2)
    assert rep.chi_p == -11 and rep.p_d == 4
    assert rep.ok_mod_p_d  # -12 divisible by 4
    assert rep.sylow_count == 5 and rep.sylow_count_ok


def test_component_count_checks():
    rep = component_count_check(alternating(4), 2)
    assert rep.component_count == 3 == rep.p_prime_part and rep.law_ok
    rep = component_count_check(symmetric(3), 2)
    assert rep.component_count == 1 < 3 and rep.law_ok
    rep = component_count_check(cyclic(6), 3)
    assert rep.component_count == 2 == rep.p_prime_part and rep.law_ok


def test_product_multiplicativity_formula_path():
    pairs = [(symmetric(3), symmetric(3), 2),
             (symmetric(3), cyclic(2), 2),
             (alternating(4), cyclic(2), 2),
             (symmetric(3), alternating(4), 3),
             (cyclic(6), symmetric(3), 2)]
    for G1, G2, p in pairs:
        G = direct_product(G1, G2)
        assert (chi_via_sylow_intersections(G, p)
                == chi_via_sylow_intersections(G1, p)
                * chi_via_sylow_intersections(G2, p))
        assert p_local_chi(G, p) == p_local_chi(G1, p) * p_local_chi(G2, p)


def test_quotient_invariance_of_local_chi():
    from cosetchi.group import p_core, quotient_group

    for maker, p in ((symmetric(4), 2), (dihedral(6), 2),
                     (parse_group_expression("A(4)xC(2)")[0], 2)):
        core = p_core(maker, p)
        assert core.order > 1
        Q, _ = quotient_group(maker, core)
        assert p_local_chi(maker, p) == p_local_chi(Q, p)


def test_trivial_group():
    one = cyclic(1)
    assert chi_via_subgroup_mobius(one, 2) == 1
    assert chi_via_sylow_intersections(one, 2) == 1
    assert chi_direct(one, 2) == 1
    assert p_local_chi(one, 2) == 1


def test_three_way_agreement_on_random_subgroups_of_s6():
    # random permutation groups, not just catalog entries
    import random

    from cosetchi.group import subgroup_generate, generate_group, symmetric

    s6 = symmetric(6)
    rng = random.Random(99)
    seen = 0
    while seen < 25:
        gens = [rng.randrange(s6.order) for _ in range(rng.randint(1, 2))]
        H = subgroup_generate(s6, gens)
        if H.order > 120:
            continue
        seen += 1
        G = generate_group(6, [s6.element(i) for i in H.element_ids])
        for p in (2, 3, 5):
            chi = chi_via_subgroup_mobius(G, p)
            assert chi == chi_via_sylow_intersections(G, p)
            assert chi == chi_direct(G, p)
            assert chi % G.p_prime_part_of_order(p) == 0
            assert (p_local_chi(G, p) - 1) % p == 0
