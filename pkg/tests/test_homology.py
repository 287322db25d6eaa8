import numpy as np
import pytest

from cosetchi.complexes import SimplicialComplex, order_complex
from cosetchi.errors import SimplexCapExceeded
from cosetchi.group import quaternion8, symmetric
from cosetchi.cosetposet import coset_poset
from cosetchi.homology import HomologySummary, homology, is_z_acyclic
from cosetchi.poset import Poset


def sphere_2():
    # boundary of the tetrahedron
    return SimplicialComplex.from_maximal_simplices(
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def test_point():
    K = SimplicialComplex.from_maximal_simplices([(0,)])
    assert homology(K).betti == (1,)
    reduced = homology(K, reduced=True)
    assert reduced.betti == (0,)
    assert is_z_acyclic(K)


def test_hollow_triangle_is_a_circle():
    K = SimplicialComplex.from_maximal_simplices([(0, 1), (0, 2), (1, 2)])
    summary = homology(K)
    assert summary.betti == (1, 1)
    assert summary.torsion == ((), ())
    assert not is_z_acyclic(K)


def test_two_sphere():
    summary = homology(sphere_2())
    assert summary.betti == (1, 0, 1)
    assert summary.torsion == ((), (), ())
    assert summary.euler_characteristic() == 2 == sphere_2().euler_characteristic()


def test_projective_plane_torsion():
    # 6-vertex triangulation; H_1 = Z/2
    rp2 = SimplicialComplex.from_maximal_simplices([
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
        (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5)])
    summary = homology(rp2)
    assert summary.betti == (1, 0, 0)
    assert summary.torsion == ((), (2,), ())
    reduced = homology(rp2, reduced=True)
    assert reduced.betti == (0, 0, 0)
    assert not is_z_acyclic(rp2)


def test_coset_complex_of_s3():
    K = coset_poset(symmetric(3), 2).order_complex()
    summary = homology(K)
    assert summary.betti == (1, 4)  # connected, chi = -3 forces b_1 = 4
    assert summary.torsion == ((), ())


def test_cone_complex_is_acyclic():
    # a p-group's coset poset has a maximum, so its complex is a cone
    K = coset_poset(quaternion8(), 2).order_complex()
    assert is_z_acyclic(K)
    assert homology(K).betti[0] == 1


def test_disconnected_betti_zero():
    two_points = SimplicialComplex.from_maximal_simplices([(0,), (1,)])
    assert homology(two_points).betti == (2,)
    assert homology(two_points, reduced=True).betti == (1,)


def test_euler_poincare_and_betti_zero_on_order_complexes():
    import random

    from oracles import random_poset

    from cosetchi.poset import connected_components

    r = random.Random(17)
    for _ in range(15):
        P = Poset(np.array(random_poset(r, r.randint(1, 7)), dtype=bool))
        K = order_complex(P)
        if K.n_simplices == 0:
            continue
        summary = homology(K)
        assert summary.euler_characteristic() == K.euler_characteristic()
        assert summary.betti[0] == len(connected_components(P))


def test_homology_cap():
    K = coset_poset(symmetric(3), 2).order_complex()
    with pytest.raises(SimplexCapExceeded):
        homology(K, cap=5)


def test_empty_complex():
    K = SimplicialComplex([])
    assert homology(K) == HomologySummary((), (), False)
    assert not is_z_acyclic(K)
