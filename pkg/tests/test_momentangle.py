from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lvmb import catalog as C
from lvmb.combinatorics import SimplicialComplex, associated_complex
from lvmb.errors import OutsidePolydisk, PreconditionViolated
from lvmb.momentangle import (
    SamplingConfig,
    abs2,
    circle_point,
    gauss,
    gdiv,
    gmul,
    in_M1hat,
    in_moment_angle,
    quotient_map,
    quotient_map_check,
    sample_complex_points,
    sample_points,
    scale_point,
    unit_coordinates,
)

F = Fraction
ONE = gauss(1)
ZERO = gauss(0)
HALF = gauss(F(1, 2))


@given(st.fractions(max_denominator=50))
def test_circle_point_is_on_the_circle(t):
    assert abs2(circle_point(t)) == 1


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_gaussian_division_inverts_multiplication(a, b):
    z = (a, b)
    u = circle_point(a + 1)
    assert gdiv(gmul(z, u), u) == z


def test_blocks_of_the_square():
    E = C.square_family()
    K = associated_complex(E)
    # facet {1,2}: coordinates 3, 4, 5 must be unit
    z = (HALF, ZERO, ONE, ONE, ONE)
    assert unit_coordinates(z) == {3, 4, 5}
    assert in_moment_angle(K, z) and in_M1hat(E, z)
    w = (HALF, ONE, HALF, ONE, ONE)  # only 2, 4, 5 unit: 1 and 3 are not adjacent
    assert not in_moment_angle(K, w) and not in_M1hat(E, w)


def test_outside_polydisk():
    E = C.square_family()
    z = (gauss(2), ONE, ONE, ONE, ONE)
    with pytest.raises(OutsidePolydisk):
        in_moment_angle(associated_complex(E), z)
    with pytest.raises(OutsidePolydisk):
        in_M1hat(E, z)


def test_ground_mismatch():
    with pytest.raises(PreconditionViolated):
        in_moment_angle(SimplicialComplex.from_facets(3, [[1, 2]]), (ONE, ONE))


@pytest.mark.parametrize(
    "E",
    [C.square_family(), C.two_triangles(), C.single_subset(3), C.p_system(3).E],
    ids=["square", "two_triangles", "single", "p3"],
)
def test_identity_on_samples(E):
    K = associated_complex(E)
    cfg = SamplingConfig(samples=300, seed=7)
    for z in list(sample_points(E.n, cfg)) + list(sample_complex_points(K, cfg)):
        assert in_moment_angle(K, z) == in_M1hat(E, z)


def test_forced_samples_land_in_the_complex():
    K = associated_complex(C.square_family())
    assert all(in_moment_angle(K, z) for z in sample_complex_points(K, SamplingConfig(samples=200)))


def test_sampling_is_seeded():
    a = list(sample_points(5, SamplingConfig(samples=20, seed=3)))
    b = list(sample_points(5, SamplingConfig(samples=20, seed=3)))
    assert a == b


def test_quotient_map_on_rotated_pairs():
    E = C.square_family()
    K = associated_complex(E)
    zs = [z for z in sample_complex_points(K, SamplingConfig(samples=100, seed=1)) if abs2(z[-1]) == 1]
    assert zs
    for i, z in enumerate(zs):
        u = circle_point(F(i, 5))
        w = scale_point(u, z)
        assert quotient_map(w) == quotient_map(z)
        assert quotient_map_check(E, z, w)
        other = zs[(i + 1) % len(zs)]
        assert quotient_map_check(E, z, other)


def test_quotient_map_preconditions():
    E = C.square_family()
    with pytest.raises(PreconditionViolated):
        quotient_map_check(E, (HALF, ZERO, ONE, ONE, ONE), (HALF, ZERO, ONE, ONE, HALF))
    E2 = C.two_triangles()  # no indispensable element
    z = tuple([ONE] * 6)
    with pytest.raises(PreconditionViolated):
        quotient_map_check(E2, z, z)
