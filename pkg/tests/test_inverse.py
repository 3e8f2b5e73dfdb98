import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lvmb import catalog as C
from lvmb.combinatorics import associated_complex, indispensable_elements
from lvmb.errors import DimensionMismatch, NotGood, NotStarshaped
from lvmb.goodsystem import Verdict, is_good_system
from lvmb.inverse import (
    SphereRealization,
    augment_circles,
    check_starshaped,
    inverse_construct,
    round_trip_check,
)
from lvmb.toric import certify_sphere

EXPECTED_TYPES = {"square": (5, 7), "segment": (3, 4), "triangle": (5, 7), "octahedron": (7, 10)}


@pytest.mark.parametrize("name", sorted(EXPECTED_TYPES))
def test_round_trips(name):
    r = C.SPHERES[name]()
    res = inverse_construct(r)
    c = res.system
    assert (c.E.M, c.E.n) == EXPECTED_TYPES[name]
    assert is_good_system(c) is Verdict.GOOD
    assert round_trip_check(r)
    assert certify_sphere(c).dimension == r.d
    relabeled = r.complex.relabel(res.label_map, c.n)
    assert associated_complex(c.E) == relabeled


def test_odd_vertex_count_uses_two_extra_labels():
    res = inverse_construct(C.triangle())
    assert res.label_map == {1: 3, 2: 4, 3: 5}
    assert set(indispensable_elements(res.system.E)) >= {1, 2}
    assert len(res.system.l[0]) == 4


def test_halfplane_is_not_starshaped():
    assert not check_starshaped(C.halfplane())
    with pytest.raises(NotStarshaped):
        inverse_construct(C.halfplane())


def test_shape_errors():
    r = SphereRealization.build([[1, 2], [2, 3], [1, 3]], [(1, 0, 0), (0, 1, 0), (-1, -1, 0)])
    with pytest.raises(DimensionMismatch):
        check_starshaped(r)


def test_zero_vertex_is_rejected():
    r = SphereRealization.build([[1], [2]], [(0,), (1,)])
    assert not check_starshaped(r)


def test_augment_circles():
    c = C.square_system()
    a = augment_circles(c)
    assert (a.E.M, a.E.n) == (5, 7)
    assert is_good_system(a) is Verdict.GOOD
    assert associated_complex(a.E).facets == associated_complex(c.E).facets
    b = augment_circles(a)
    assert (b.E.M, b.E.n) == (7, 9)
    assert is_good_system(b) is Verdict.GOOD
    assert certify_sphere(a).dimension == certify_sphere(c).dimension


def test_augment_needs_good_system():
    with pytest.raises(NotGood):
        augment_circles(C.disjoint_hulls())


@st.composite
def starshaped_polygons(draw):
    """Integer vectors in strictly increasing angular order with every gap < pi."""
    k = draw(st.integers(3, 6))
    pts = draw(
        st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=k, max_size=k, unique=True)
    )
    assume(all(p != (0, 0) for p in pts))
    angles = [math.atan2(y, x) for x, y in pts]
    assume(len({round(a, 9) for a in angles}) == k)
    order = sorted(range(k), key=lambda i: angles[i])
    sorted_angles = [angles[i] for i in order]
    gaps = [b - a for a, b in zip(sorted_angles, sorted_angles[1:])]
    gaps.append(sorted_angles[0] + 2 * math.pi - sorted_angles[-1])
    # the float screen only rejects near-degenerate draws; the exact fan check
    # inside inverse_construct is the real judge
    assume(all(1e-6 < g < math.pi - 1e-6 for g in gaps))
    verts = [pts[i] for i in order]
    facets = [[i + 1, (i + 1) % k + 1] for i in range(k)]
    return SphereRealization.build(facets, verts)


@settings(max_examples=15)
@given(starshaped_polygons())
def test_random_polygons_round_trip(r):
    assert check_starshaped(r)
    assert round_trip_check(r)
