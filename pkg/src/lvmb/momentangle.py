"""Exact membership predicates for moment-angle complexes.

Points of C^n are tuples of ``(re, im)`` Fraction pairs; all disk and circle
tests compare |z_j|^2 with 1 so no square roots are taken.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .combinatorics import (
    FundamentalSet,
    SimplicialComplex,
    associated_complex,
    indispensable_elements,
    is_acceptable,
)
from .errors import OutsidePolydisk, PreconditionViolated

Gauss = tuple[Fraction, Fraction]
GaussPoint = tuple[Gauss, ...]

ONE = Fraction(1)


def gauss(re, im=0) -> Gauss:
    return (Fraction(re), Fraction(im))


def gmul(a: Gauss, b: Gauss) -> Gauss:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gdiv(a: Gauss, b: Gauss) -> Gauss:
    nb = abs2(b)
    if nb == 0:
        raise ZeroDivisionError("division by 0 in Q(i)")
    return ((a[0] * b[0] + a[1] * b[1]) / nb, (a[1] * b[0] - a[0] * b[1]) / nb)


def abs2(a: Gauss) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def scale_point(u: Gauss, z: GaussPoint) -> GaussPoint:
    """Diagonal action of a unit u."""
    return tuple(gmul(u, zj) for zj in z)


def unit_coordinates(z: GaussPoint) -> set[int]:
    """J_z: the 1-based indices with |z_j| = 1."""
    return {j for j, zj in enumerate(z, start=1) if abs2(zj) == ONE}


def _check_disk(z: GaussPoint):
    if any(abs2(zj) > ONE for zj in z):
        raise OutsidePolydisk("point is outside the closed polydisk")


def in_moment_angle(K: SimplicialComplex, z: GaussPoint) -> bool:
    """z lies in some block B_sigma: |z_j| = 1 off a face sigma of K."""
    _check_disk(z)
    if len(z) != K.ground:
        raise PreconditionViolated("point and complex live on different ground sets")
    J = unit_coordinates(z)
    return any(all(j in J for j in range(1, K.ground + 1) if j not in set(F)) for F in K.facets)


def in_M1hat(E: FundamentalSet, z: GaussPoint) -> bool:
    _check_disk(z)
    return is_acceptable(E, unit_coordinates(z))


def circle_point(t) -> Gauss:
    """Rational parametrisation of the unit circle."""
    t = Fraction(t)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def quotient_map(z: GaussPoint) -> GaussPoint:
    """(z_1/z_n, ..., z_{n-1}/z_n)."""
    return tuple(gdiv(zj, z[-1]) for zj in z[:-1])


def quotient_map_check(E: FundamentalSet, z: GaussPoint, w: GaussPoint) -> bool:
    """phi(z) == phi(w) exactly when z and w differ by a unit, and phi(z) lands
    in the moment-angle complex of the same sphere on one fewer coordinate."""
    n = E.n
    if n not in indispensable_elements(E):
        raise PreconditionViolated(f"index {n} must be indispensable")
    K = associated_complex(E)
    for p in (z, w):
        if len(p) != n or not in_moment_angle(K, p) or abs2(p[-1]) != ONE:
            raise PreconditionViolated("points must lie in the moment-angle complex with |z_n| = 1")
    same_image = quotient_map(z) == quotient_map(w)
    u = gdiv(z[-1], w[-1])
    same_orbit = abs2(u) == ONE and scale_point(u, w) == tuple(z)
    if same_image != same_orbit:
        return False
    K_small = SimplicialComplex(n - 1, K.facets)
    return in_moment_angle(K_small, quotient_map(z)) and in_moment_angle(K_small, quotient_map(w))


@dataclass(frozen=True)
class SamplingConfig:
    samples: int = 1000
    seed: int = 0
    circle_params: tuple = (0, 1, Fraction(1, 2), Fraction(1, 3), 2, -1, Fraction(-2, 3), 3)
    interior_values: tuple = (Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(-1, 4))


def sample_points(n: int, config: SamplingConfig) -> Iterable[GaussPoint]:
    """Structured polydisk samples mixing 0, interior and unit coordinates."""
    rng = random.Random(config.seed)
    interior = [gauss(a, b) for a in config.interior_values for b in config.interior_values
                if abs2(gauss(a, b)) < ONE]
    circle = [circle_point(t) for t in config.circle_params]
    for _ in range(config.samples):
        p_unit = rng.random()
        yield tuple(
            rng.choice(circle) if rng.random() < p_unit else rng.choice(interior)
            for _ in range(n)
        )


def sample_complex_points(K: SimplicialComplex, config: SamplingConfig) -> Iterable[GaussPoint]:
    """Samples forced into the moment-angle complex of K (unit off a random facet)."""
    rng = random.Random(config.seed + 1)
    circle = [circle_point(t) for t in config.circle_params]
    base = list(sample_points(K.ground, config))
    for z in base:
        F = set(rng.choice(K.facets))
        yield tuple(zj if j in F else rng.choice(circle) for j, zj in enumerate(z, start=1))
