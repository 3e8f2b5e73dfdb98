"""Small named instances used by the tests, scripts and JSON fixtures."""

from __future__ import annotations

from .combinatorics import FundamentalSet, validate_fundamental_set
from .goodsystem import GoodSystemCandidate
from .inverse import SphereRealization

SQUARE_SUBSETS = [[1, 2, 5], [1, 4, 5], [2, 3, 5], [3, 4, 5]]


def square_family() -> FundamentalSet:
    """Type (3,5,1) family whose associated complex is a 4-cycle."""
    return validate_fundamental_set(SQUARE_SUBSETS, 5)


def square_system() -> GoodSystemCandidate:
    """Good system on the 4-cycle: l = (1, i, 1, i, 0)."""
    return GoodSystemCandidate.build(SQUARE_SUBSETS, 5, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)])


def p_system(p) -> GoodSystemCandidate:
    """The 0-sphere system l = (1, i, p, -1-i) on {{1,2,4},{2,3,4}}."""
    return GoodSystemCandidate.build([[1, 2, 4], [2, 3, 4]], 4, [(1, 0), (0, 1), (p, 0), (-1, -1)])


def disjoint_hulls() -> GoodSystemCandidate:
    """Same family as square_system but with l_5 = 0 at the centre of a cross:
    the triangles {1,2,5} and {3,4,5} only touch at 0, so imbrication fails."""
    return GoodSystemCandidate.build(SQUARE_SUBSETS, 5, [(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)])


def two_triangles() -> FundamentalSet:
    """SEU but not minimal: the complex is two disjoint triangle boundaries."""
    return validate_fundamental_set(
        [[3, 4, 5, 6], [1, 4, 5, 6], [2, 4, 5, 6], [1, 2, 3, 6], [1, 2, 3, 4], [1, 2, 3, 5]], 6
    )


def single_subset(M: int = 3) -> FundamentalSet:
    return validate_fundamental_set([list(range(1, M + 1))], M)


def square() -> SphereRealization:
    return SphereRealization.build([[1, 2], [2, 3], [3, 4], [1, 4]], [(1, 0), (0, 1), (-1, 0), (0, -1)])


def segment() -> SphereRealization:
    return SphereRealization.build([[1], [2]], [(1,), (-1,)])


def triangle() -> SphereRealization:
    return SphereRealization.build([[1, 2], [2, 3], [1, 3]], [(1, 0), (0, 1), (-1, -1)])


def octahedron() -> SphereRealization:
    facets = [[a, b, c] for a in (1, 4) for b in (2, 5) for c in (3, 6)]
    verts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    return SphereRealization.build(facets, verts)


def halfplane() -> SphereRealization:
    """Square combinatorics with x_3 = (1,1): every vertex has x + y >= 0."""
    return SphereRealization.build([[1, 2], [2, 3], [3, 4], [1, 4]], [(1, 0), (0, 1), (1, 1), (0, -1)])


SPHERES = {"square": square, "segment": segment, "triangle": triangle, "octahedron": octahedron}
