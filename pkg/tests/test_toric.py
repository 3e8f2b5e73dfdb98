import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from lvmb import catalog as C
from lvmb import exactgeom as eg
from lvmb.combinatorics import associated_complex
from lvmb.errors import CertificationFailed, NotAcceptableSupport, NotFullDimensional, RankDeficient
from lvmb.goodsystem import GoodSystemCandidate
from lvmb.inverse import augment_circles, inverse_construct
from lvmb.toric import (
    Fan,
    build_lattice_maps,
    certify_sphere,
    cones_containing,
    collapsed_indices,
    condition_K_normalize,
    exponent_matrix,
    fan_is_complete,
    fan_of_S,
    fan_of_V,
    generic_direction,
    intersect_cones_face_check,
    kernel_order,
    left_kernel,
    project_fan,
    stabilizer_order,
    underlying_complex,
)

from oracles import count_torsion_solutions, divisors_from_minors


def good_systems():
    out = {"square_system": C.square_system(), "p3": C.p_system(3), "p4": C.p_system(4)}
    for name, make in C.SPHERES.items():
        out[name] = inverse_construct(make()).system
    out["augmented"] = augment_circles(C.square_system())
    return out


def test_fan_of_S_on_square_family():
    fan = fan_of_S(C.square_family())
    assert fan.rank == 5
    cones = {tuple(sorted(fan.labels[i] for i in c)) for c in fan.maximal_cones}
    assert cones == {(1, 2), (1, 4), (2, 3), (3, 4)}
    assert all(fan.rays[i] == tuple(int(j == fan.labels[i]) for j in range(1, 6)) for i in range(4))


def test_fan_of_V():
    fan = fan_of_V(C.square_family())
    assert fan.rank == 4 and fan.rays[0] == (1, 0, 0, 0)
    assert underlying_complex(fan) == associated_complex(C.square_family())


def test_projected_fan_of_square_system():
    cert = certify_sphere(C.square_system())
    fan = cert.fan
    assert fan.rank == 2 and len(fan.rays) == 4 and len(fan.maximal_cones) == 4
    assert set(fan.rays) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert cert.dimension == 1
    assert underlying_complex(fan) == associated_complex(C.square_system().E)
    maps = build_lattice_maps(condition_K_normalize(C.square_system()))
    assert collapsed_indices(C.square_system(), maps) == (5,)


def test_zero_sphere_fan():
    cert = certify_sphere(C.p_system(3))
    assert cert.fan.rank == 1 and set(cert.fan.rays) == {(1,), (-1,)}
    assert cert.dimension == 0


def test_indispensable_image_need_not_vanish():
    # index 2 is indispensable for the p = 3 system, yet its column of Gmat is
    # nonzero; it simply does not become a ray
    c = C.p_system(3)
    maps = build_lattice_maps(c)
    assert maps.Gmat == [[7, -2, -3, -2]] or maps.Gmat == [[-7, 2, 3, 2]]
    assert collapsed_indices(c, maps) == ()
    assert project_fan(c).labels == (1, 3)


def test_single_subset_rank_zero_fan():
    c = GoodSystemCandidate.build([[1, 2, 3]], 3, [(0, 0), (1, 0), (0, 1)])
    cert = certify_sphere(c)
    assert cert.fan.rank == 0 and cert.fan.rays == () and cert.dimension == -1


def test_kernel_orders():
    assert kernel_order(C.p_system(3)) == 1
    assert kernel_order(C.p_system(4)) == 3
    assert kernel_order(condition_K_normalize(C.square_system())) == 1


@pytest.mark.parametrize("p, expected", [(3, 1), (4, 3), (5, 1), (7, 3)])
def test_kernel_order_matches_root_of_unity_count(p, expected):
    F = exponent_matrix(C.p_system(p))
    assert count_torsion_solutions(F) == expected
    assert kernel_order(C.p_system(p)) == expected


def test_stabilizer_orders():
    c = C.square_system()
    assert stabilizer_order(c, {1, 2, 5}) == 1
    p3 = C.p_system(3)
    with pytest.raises(NotAcceptableSupport):
        stabilizer_order(p3, {1, 3, 4})
    assert stabilizer_order(p3, {1, 3, 4}, require_acceptable=False) == 2
    assert stabilizer_order(c, {1, 3}, require_acceptable=False) == math.inf


def test_certification_failures():
    with pytest.raises(CertificationFailed) as info:
        certify_sphere(C.disjoint_hulls())
    assert info.value.stage == "good_system"


def test_rank_deficient_maps():
    c = GoodSystemCandidate.build([[1, 2, 3]], 3, [(0, 0), (1, 0), (2, 0)])
    with pytest.raises(RankDeficient):
        build_lattice_maps(c)
    with pytest.raises(RankDeficient):
        kernel_order(c)


def test_completeness_checks():
    quadrants = Fan(2, ((1, 0), (0, 1), (-1, 0), (0, -1)), ((0, 1), (1, 2), (2, 3), (0, 3)))
    assert intersect_cones_face_check(quadrants) and fan_is_complete(quadrants)
    half = Fan(2, ((1, 0), (0, 1), (-1, 0)), ((0, 1), (1, 2)))
    assert intersect_cones_face_check(half) and not fan_is_complete(half)
    overlap = Fan(2, ((1, 0), (1, 1), (0, 1)), ((0, 2), (1, 2)))
    assert not intersect_cones_face_check(overlap)
    with pytest.raises(NotFullDimensional):
        fan_is_complete(Fan(2, ((1, 0),), ((0,),)))
    octagon = Fan(
        2,
        ((1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1), (-1, -1), (1, -1)),
        ((0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3), (3, 7), (7, 0)),
    )
    assert fan_is_complete(octagon)
    # pentagram: every wall in two cones, connected, but the plane is covered twice
    rays = ((1, 0), (1, 2), (-1, 1), (-2, -1), (1, -2))
    pentagram = Fan(2, rays, ((0, 2), (2, 4), (1, 4), (1, 3), (0, 3)))
    assert not fan_is_complete(pentagram)
    assert not intersect_cones_face_check(pentagram)


def test_generic_direction_avoids_walls():
    fan = certify_sphere(inverse_construct(C.octahedron()).system).fan
    p = generic_direction(fan)
    assert len(cones_containing(fan, p)) == 1
    for cone in fan.maximal_cones:
        a = eg.solve_square(eg.transpose(fan.cone_matrix(cone)), list(p))
        assert all(x != 0 for x in a)


@pytest.mark.parametrize("name", list(good_systems()))
def test_gmat_invariance(name):
    c = condition_K_normalize(good_systems()[name])
    a = build_lattice_maps(c, "rref").Gmat
    b = build_lattice_maps(c, "snf").Gmat
    F = exponent_matrix(c)
    for G in (a, b):
        assert eg.matmul(G, F) == [[0] * len(F[0]) for _ in G]
        assert len(G) == c.n - 2 * c.m - 1
    # same row space, so the two quotient maps differ by an invertible matrix
    assert eg.rank(a + b) == len(a)
    assert underlying_complex(project_fan(c, "rref")) == underlying_complex(project_fan(c, "snf"))


@pytest.mark.parametrize("name", list(good_systems()))
def test_certified_spheres(name):
    c = good_systems()[name]
    cert = certify_sphere(c)
    assert cert.dimension == c.n - 2 * c.m - 2
    assert cert.complex == associated_complex(c.E)
    assert len(cert.fan.rays) == len(associated_complex(c.E).vertices)
    for method in ("rref", "snf"):
        assert underlying_complex(certify_sphere(c, method).fan) == cert.complex


def test_snf_kernel_is_saturated():
    # the snf kernel basis spans every integer vector g with g F = 0
    F = exponent_matrix(C.p_system(4))
    G = left_kernel(F, "snf")
    assert [d for d in eg.elementary_divisors(G) if d] == [1] * len(G)


def test_condition_K_scales_by_lcm():
    c = GoodSystemCandidate.build(C.SQUARE_SUBSETS, 5, [("1/2", 0), (0, "1/3"), (1, 0), (0, 1), (0, 0)])
    assert condition_K_normalize(c).l[0] == (Fraction(3), Fraction(0))


small = st.integers(-4, 4)


@given(st.lists(st.tuples(small, small), min_size=3, max_size=5))
def test_kernel_order_property(pts):
    c = GoodSystemCandidate.build([[1, 2, 3]], len(pts), pts)
    F = exponent_matrix(c)
    assume(eg.rank(F) == 3)
    assert kernel_order(c) == math.prod(divisors_from_minors(F))
    if max(abs(x) for row in F for x in row) <= 3:
        assert kernel_order(c) == count_torsion_solutions(F)


@given(st.lists(st.tuples(small, small), min_size=3, max_size=4), st.data())
def test_stabilizer_property(pts, data):
    c = GoodSystemCandidate.build([[1, 2, 3]], len(pts), pts)
    I = data.draw(st.sets(st.integers(1, len(pts)), min_size=1))
    order = stabilizer_order(c, I, require_acceptable=False)
    I = sorted(I)
    diffs = [[a - b for a, b in zip(c.l[i - 1], c.l[I[0] - 1])] for i in I[1:]]
    diffs = [[int(x) for x in row] for row in diffs]
    if not diffs or eg.rank(diffs) < 2:
        assert order == math.inf
    else:
        assert order == count_torsion_solutions(diffs)
