from itertools import permutations as iter_permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosetchi.errors import ParseError
from cosetchi.perm import Permutation

perms = st.integers(2, 7).flatmap(
    lambda n: st.permutations(list(range(n)))).map(Permutation)


def test_identity():
    e = Permutation.identity(4)
    assert e.images == (0, 1, 2, 3)
    assert e.order() == 1
    assert e.cycle_string() == "()"


def test_composition_applies_left_first():
    a = Permutation.from_cycle_string("(1 2)", 3)
    b = Permutation.from_cycle_string("(2 3)", 3)
    # point 1 under a*b: a sends it to 2, b sends 2 to 3
    assert (a * b)(0) == 2


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_cycle_string_round_trip():
    g = Permutation.from_cycle_string("(1 2)(3 4)", 5)
    assert g.images == (1, 0, 3, 2, 4)
    assert g.cycle_string() == "(1 2)(3 4)"
    assert Permutation.from_cycle_string(g.cycle_string(), 5) == g


def test_cycle_parse_errors():
    with pytest.raises(ParseError):
        Permutation.from_cycle_string("(1 2", 3)
    with pytest.raises(ParseError):
        Permutation.from_cycle_string("(1 2)(2 3)", 3)
    with pytest.raises(ParseError):
        Permutation.from_cycle_string("(1 9)", 3)


def test_identity_is_lex_minimal():
    # element id 0 of any enumerated group is the identity because of this
    for n in range(1, 6):
        e = Permutation.identity(n)
        assert all(e.images <= Permutation(p).images
                   for p in iter_permutations(range(n)))


@given(perms)
def test_inverse_law(g):
    e = Permutation.identity(g.degree)
    assert g * g.inverse() == e
    assert g.inverse() * g == e


@given(perms)
def test_round_trip_and_order(g):
    assert Permutation.from_cycle_string(g.cycle_string(), g.degree) == g
    acc = Permutation.identity(g.degree)
    for _ in range(g.order()):
        acc = acc * g
    assert acc == Permutation.identity(g.degree)
