import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_poset

from cosetchi.poset import (Poset, connected_components, euler_char_mobius,
                            mobius, mobius_from, poset_product)


def chain_poset(n):
    return Poset(np.triu(np.ones((n, n), dtype=bool)))


def antichain(n):
    return Poset(np.eye(n, dtype=bool))


def boolean_lattice_2():
    # bottom < a, b < top
    leq = np.eye(4, dtype=bool)
    leq[0, :] = True
    leq[:, 3] = True
    return Poset(leq)


def test_validation_rejects_bad_relations():
    with pytest.raises(ValueError):
        Poset(np.zeros((2, 2), dtype=bool))  # not reflexive
    bad = np.eye(2, dtype=bool)
    bad[0, 1] = bad[1, 0] = True
    with pytest.raises(ValueError):
        Poset(bad)  # not antisymmetric
    bad = np.eye(3, dtype=bool)
    bad[0, 1] = bad[1, 2] = True
    with pytest.raises(ValueError):
        Poset(bad)  # not transitive


def test_mobius_two_chain():
    table = mobius(chain_poset(2))
    assert table[(0, 1)] == -1
    assert table[(0, 0)] == table[(1, 1)] == 1


def test_mobius_boolean_lattice():
    table = mobius(boolean_lattice_2())
    assert table[(0, 3)] == 1
    assert table[(0, 1)] == table[(0, 2)] == -1


def test_mobius_from_matches_full_table():
    rng = random.Random(3)
    for _ in range(20):
        P = Poset(np.array(random_poset(rng, rng.randint(1, 9)), dtype=bool))
        table = mobius(P)
        for x in range(P.size):
            col = mobius_from(P, x)
            for y, v in col.items():
                assert table[(x, y)] == v


def test_euler_char_mobius_examples():
    assert euler_char_mobius(antichain(5)) == 5
    assert euler_char_mobius(chain_poset(2)) == 1  # 1 + 1 - 1
    assert euler_char_mobius(Poset(np.zeros((0, 0), dtype=bool))) == 0


def test_components():
    assert len(connected_components(antichain(4))) == 4
    assert len(connected_components(chain_poset(3))) == 1
    two = np.eye(4, dtype=bool)
    two[0, 1] = two[2, 3] = True
    comps = connected_components(Poset(two))
    assert comps == [[0, 1], [2, 3]]


def test_product_with_point_is_isomorphic():
    rng = random.Random(5)
    P = Poset(np.array(random_poset(rng, 6), dtype=bool))
    Q = poset_product(P, antichain(1))
    assert Q.size == P.size
    assert (Q.leq == P.leq).all()


def test_product_of_two_chains_is_diamond_with_diagonal():
    D = poset_product(chain_poset(2), chain_poset(2))
    # (0,0) < (0,1), (1,0) < (1,1) plus the diagonal pair and reflexivity
    assert int(D.leq.sum()) == 9
    assert D.less(0, 3) and D.less(0, 1) and D.less(0, 2)
    assert not D.leq[1, 2] and not D.leq[2, 1]


def test_rota_product_formula_sampled():
    rng = random.Random(11)
    for _ in range(25):
        P = Poset(np.array(random_poset(rng, rng.randint(1, 6)), dtype=bool))
        Q = Poset(np.array(random_poset(rng, rng.randint(1, 6)), dtype=bool))
        R = poset_product(P, Q)
        mp, mq, mr = mobius(P), mobius(Q), mobius(R)
        for (x, y), v in mr.entries.items():
            x1, x2 = divmod(x, Q.size)
            y1, y2 = divmod(y, Q.size)
            assert v == mp[(x1, y1)] * mq[(x2, y2)]


def test_product_euler_char_multiplicative():
    rng = random.Random(13)
    for _ in range(15):
        P = Poset(np.array(random_poset(rng, rng.randint(1, 6)), dtype=bool))
        Q = Poset(np.array(random_poset(rng, rng.randint(1, 6)), dtype=bool))
        assert (euler_char_mobius(poset_product(P, Q))
                == euler_char_mobius(P) * euler_char_mobius(Q))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 10))
def test_mobius_convolutions_random(seed, n):
    P = Poset(np.array(random_poset(random.Random(seed), n), dtype=bool))
    table = mobius(P)
    leq = P.leq
    for (x, y) in table.entries:
        left = sum(table[(x, z)] for z in range(n)
                   if leq[x, z] and leq[z, y])
        right = sum(table[(z, y)] for z in range(n)
                    if leq[x, z] and leq[z, y])
        expected = 1 if x == y else 0
        assert left == expected and right == expected


def test_subposet_mobius_stability():
    # whenever the open interval (x, y) is the same set in a poset and in an
    # induced subposet, the two Möbius values agree
    rng = random.Random(29)
    for _ in range(25):
        n = rng.randint(2, 9)
        big = Poset(np.array(random_poset(rng, n), dtype=bool))
        keep = sorted(rng.sample(range(n), rng.randint(1, n)))
        sub = Poset(big.leq[np.ix_(keep, keep)])
        big_table, sub_table = mobius(big), mobius(sub)
        for a, x in enumerate(keep):
            for b, y in enumerate(keep):
                if x == y or not big.leq[x, y]:
                    continue
                interior = {z for z in range(n)
                            if big.leq[x, z] and big.leq[z, y]
                            and z not in (x, y)}
                sub_interior = {keep[c] for c in range(len(keep))
                                if sub.leq[a, c] and sub.leq[c, b]
                                and c not in (a, b)}
                if interior == sub_interior:
                    assert sub_table[(a, b)] == big_table[(x, y)]


def test_with_bounds_hall_shape():
    P = antichain(3)
    bounded, bottom, top = P.with_bounds()
    bounded._validate()
    assert bounded.size == 5
    assert all(bounded.leq[bottom, v] for v in range(5))
    assert all(bounded.leq[v, top] for v in range(5) if v != top)
    # Hall: reduced chi of a 3-antichain is 2
    assert mobius_from(bounded, bottom)[top] == 2
