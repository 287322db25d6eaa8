import numpy as np
import pytest

from cosetchi.complexes import (SimplicialComplex, euler_char_simplices,
                                order_complex, read_complex,
                                reduced_euler_char, write_complex)
from cosetchi.errors import SimplexCapExceeded
from cosetchi.poset import Poset


def chain_poset(n):
    return Poset(np.triu(np.ones((n, n), dtype=bool)))


def antichain(n):
    return Poset(np.eye(n, dtype=bool))


def test_antichain_complex():
    K = order_complex(antichain(4))
    assert K.counts == [4]
    assert euler_char_simplices(K) == 4


def test_three_chain_complex():
    K = order_complex(chain_poset(3))
    assert K.counts == [3, 3, 1]
    assert euler_char_simplices(K) == 1
    assert reduced_euler_char(K) == 0


def test_single_point_and_empty():
    assert euler_char_simplices(order_complex(antichain(1))) == 1
    empty = order_complex(Poset(np.zeros((0, 0), dtype=bool)))
    assert euler_char_simplices(empty) == 0
    assert empty.counts == []


def test_simplex_cap():
    with pytest.raises(SimplexCapExceeded):
        order_complex(chain_poset(8), cap=10)


def test_faces_are_closed():
    K = order_complex(chain_poset(4))
    for d in range(1, K.dim + 1):
        lower = set(K.simplices_by_dim[d - 1])
        for s in K.simplices_by_dim[d]:
            for k in range(len(s)):
                assert s[:k] + s[k + 1:] in lower


def test_from_maximal_simplices():
    hollow = SimplicialComplex.from_maximal_simplices([(0, 1), (0, 2), (1, 2)])
    assert hollow.counts == [3, 3]
    assert euler_char_simplices(hollow) == 0
    filled = SimplicialComplex.from_maximal_simplices([(0, 1, 2)])
    assert filled.counts == [3, 3, 1]


def test_maximal_simplices_of_order_complex():
    K = order_complex(chain_poset(3))
    assert K.maximal_simplices() == [(0, 1, 2)]
    hollow = SimplicialComplex.from_maximal_simplices([(0, 1), (0, 2), (1, 2)])
    assert hollow.maximal_simplices() == [(0, 1), (0, 2), (1, 2)]


def test_export_round_trip():
    K = order_complex(chain_poset(3))
    text = write_complex(K, [f"el{i}" for i in range(3)])
    lines = text.splitlines()
    assert lines[0] == "vertices: 3"
    assert lines[1] == "v 0 el0"
    assert lines[-1] == "s 0 1 2"
    K2, labels = read_complex(text)
    assert K2 == K
    assert labels == {0: "el0", 1: "el1", 2: "el2"}
    # byte-exact determinism
    assert write_complex(K2, [labels[i] for i in range(3)]) == text
