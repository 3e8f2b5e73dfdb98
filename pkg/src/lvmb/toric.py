"""Lattice maps, fans, fan projection and sphere certification."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import exactgeom as eg
from .combinatorics import (
    FundamentalSet,
    SimplicialComplex,
    associated_complex,
    facet_graph_connected,
    indispensable_elements,
    is_acceptable,
)
from .errors import (
    CertificationFailed,
    CollapsedRay,
    NonSimplicialImage,
    NotAcceptableSupport,
    NotFullDimensional,
    RankDeficient,
)
from .goodsystem import GoodSystemCandidate, Verdict, is_good_system

Cone = tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """Simplicial fan given by its rays and maximal cones.

    ``maximal_cones`` index into ``rays`` (0-based). ``labels[i]`` is the
    ground-set element that ray ``i`` stands for (1-based); ``ground`` is the
    size of that ground set. The zero fan is ``rays=()``, ``maximal_cones=((),)``.
    """

    rank: int
    rays: tuple[tuple[int, ...], ...]
    maximal_cones: tuple[Cone, ...]
    labels: Optional[tuple[int, ...]] = None
    ground: Optional[int] = None

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(1, len(self.rays) + 1)))
        if self.ground is None:
            object.__setattr__(self, "ground", max(self.labels, default=0))
        if any(len(r) != self.rank for r in self.rays):
            raise ValueError("ray of the wrong length")

    def cone_matrix(self, cone: Cone) -> list[list[int]]:
        return [list(self.rays[i]) for i in cone]

    def is_simplicial(self) -> bool:
        if len(set(self.rays)) != len(self.rays):
            return False
        if any(eg.primitive(r) != tuple(r) or not any(r) for r in self.rays):
            return False
        return all(eg.rank(self.cone_matrix(c)) == len(c) for c in self.maximal_cones if c)


@dataclass(frozen=True)
class LatticeMaps:
    Fmat: list[list[int]]
    Gmat: list[list[int]]


@dataclass(frozen=True)
class SphereCertificate:
    complex: SimplicialComplex
    fan: Fan
    dimension: int
    kernel_point: tuple[int, ...]


def condition_K_normalize(c: GoodSystemCandidate) -> GoodSystemCandidate:
    """Scale all vectors by the lcm of their denominators."""
    L = 1
    for v in c.l:
        for x in v:
            L = math.lcm(L, x.denominator)
    return GoodSystemCandidate(c.E, tuple(tuple(Fraction(x * L) for x in v) for v in c.l))


def _integer_vectors(c: GoodSystemCandidate) -> list[list[int]]:
    out = []
    for v in c.l:
        if any(x.denominator != 1 for x in v):
            raise ValueError("system is not integral; run condition_K_normalize first")
        out.append([int(x) for x in v])
    return out


def exponent_matrix(c: GoodSystemCandidate) -> list[list[int]]:
    """n x (2m+1) integer matrix with rows (1, l_j)."""
    return [[1] + v for v in _integer_vectors(c)]


def left_kernel(F, method: str = "rref") -> list[list[int]]:
    """Integer rows g with g F = 0 spanning the rational left kernel.

    ``rref`` uses reduced echelon form; ``snf`` reads the trailing rows of the
    left transform in the Smith form, which is a lattice basis of the
    saturated kernel.
    """
    n = len(F)
    r = eg.rank(F) if F and F[0] else 0
    if method == "rref":
        if not F or not F[0]:
            return [[int(i == j) for j in range(n)] for i in range(n)]
        return [list(v) for v in eg.rational_kernel_basis(eg.transpose(F))]
    if method == "snf":
        snf = eg.smith_normal_form(F)
        return [list(row) for row in snf.U[r:]]
    raise ValueError(f"unknown kernel method {method!r}")


def build_lattice_maps(c: GoodSystemCandidate, method: str = "rref") -> LatticeMaps:
    F = exponent_matrix(c)
    if eg.rank(F) != 2 * c.m + 1:
        raise RankDeficient("the vectors do not affinely span R^2m")
    G = left_kernel(F, method)
    return LatticeMaps(F, G)


def fan_of_S(E: FundamentalSet) -> Fan:
    K = associated_complex(E)
    verts = K.vertices
    pos = {v: i for i, v in enumerate(verts)}
    rays = tuple(tuple(int(j == v) for j in range(1, E.n + 1)) for v in verts)
    cones = tuple(tuple(pos[v] for v in f) for f in K.facets)
    return Fan(E.n, rays, cones, labels=verts, ground=E.n)


def fan_of_V(E: FundamentalSet) -> Fan:
    K = associated_complex(E)
    verts = K.vertices
    pos = {v: i for i, v in enumerate(verts)}
    d = E.n - 1

    def gen(v):
        if v == E.n:
            return tuple([-1] * d)
        return tuple(int(j == v) for j in range(1, E.n))

    rays = tuple(gen(v) for v in verts)
    cones = tuple(tuple(pos[v] for v in f) for f in K.facets)
    return Fan(d, rays, cones, labels=verts, ground=E.n)


def project_fan(c: GoodSystemCandidate, method: str = "rref", maps: LatticeMaps | None = None) -> Fan:
    """Image of the fan of S under the quotient map given by Gmat."""
    maps = maps or build_lattice_maps(c, method)
    G = maps.Gmat
    rank = c.n - 2 * c.m - 1
    if len(G) != rank:
        raise RankDeficient(f"kernel has {len(G)} rows, expected {rank}")
    indisp = set(indispensable_elements(c.E))
    K = associated_complex(c.E)
    verts = K.vertices
    rays = []
    for i in range(1, c.n + 1):
        # indispensable indices are not rays; their image may or may not vanish
        if i in indisp:
            continue
        u = tuple(row[i - 1] for row in G)
        if not any(u):
            raise CollapsedRay(f"vertex {i} maps to the zero vector")
        rays.append(eg.primitive(u))
    if len(set(rays)) != len(rays):
        raise NonSimplicialImage("two vertices map to the same ray")
    pos = {v: i for i, v in enumerate(verts)}
    cones = tuple(tuple(pos[v] for v in f) for f in K.facets)
    fan = Fan(rank, tuple(rays), cones, labels=verts, ground=c.n)
    for cone in cones:
        if cone and eg.rank(fan.cone_matrix(cone)) != len(cone):
            raise NonSimplicialImage(f"cone over {[verts[i] for i in cone]} is degenerate")
    return fan


def collapsed_indices(c: GoodSystemCandidate, maps: LatticeMaps) -> tuple[int, ...]:
    """Indices i whose image Gmat e_i is zero."""
    return tuple(i for i in range(1, c.n + 1) if not any(row[i - 1] for row in maps.Gmat))


def _cones_meet_properly(fan: Fan, s: Cone, t: Cone) -> bool:
    # look for x = sum a_i r_i (i in s) = sum b_j r_j (j in t), a, b >= 0, with
    # positive weight on some ray outside the shared face
    shared = set(s) & set(t)
    cols = [(i, 1) for i in s] + [(j, -1) for j in t]
    norm = [0 if i in shared else 1 for i, _ in cols]
    if not any(norm):
        return True
    rows = [[sign * fan.rays[i][d] for i, sign in cols] for d in range(fan.rank)]
    ok, _ = eg.lp_feasible_strict(rows + [norm], [0] * fan.rank + [1])
    return not ok


def intersect_cones_face_check(fan: Fan) -> bool:
    """Every two maximal cones meet exactly in the cone on their shared rays."""
    if not fan.is_simplicial():
        return False
    for s, t in itertools.combinations(fan.maximal_cones, 2):
        if not _cones_meet_properly(fan, s, t):
            return False
    return True


def _walls(fan: Fan) -> Counter:
    walls: Counter = Counter()
    for cone in fan.maximal_cones:
        for w in itertools.combinations(sorted(cone), len(cone) - 1):
            walls[w] += 1
    return walls


def generic_direction(fan: Fan) -> tuple[int, ...]:
    """A point off every wall hyperplane, taken on the moment curve."""
    d = fan.rank
    if d == 1:
        return (1,)
    normals = []
    for w in _walls(fan):
        basis = eg.rational_kernel_basis(fan.cone_matrix(w))
        if len(basis) == 1:
            normals.append(basis[0])
    t = 1
    while True:
        p = tuple(t**k for k in range(d))
        if all(sum(a * b for a, b in zip(nv, p)) != 0 for nv in normals):
            return p
        t += 1


def cones_containing(fan: Fan, p) -> list[Cone]:
    out = []
    for cone in fan.maximal_cones:
        B = eg.transpose(fan.cone_matrix(cone))
        a = eg.solve_square(B, list(p))
        if a is not None and all(x >= 0 for x in a):
            out.append(cone)
    return out


def fan_is_complete(fan: Fan) -> bool:
    """Support is all of R^rank (walls, connectivity, single cover at one point)."""
    d = fan.rank
    if any(len(c) != d for c in fan.maximal_cones):
        raise NotFullDimensional("a maximal cone is not full-dimensional")
    if d == 0:
        return True
    walls = _walls(fan)
    if any(cnt != 2 for cnt in walls.values()):
        return False
    K = underlying_complex(fan, use_labels=False)
    if not facet_graph_connected(K):
        return False
    return len(cones_containing(fan, generic_direction(fan))) == 1


def underlying_complex(fan: Fan, use_labels: bool = True) -> SimplicialComplex:
    if use_labels:
        return SimplicialComplex.from_facets(
            fan.ground, ([fan.labels[i] for i in cone] for cone in fan.maximal_cones)
        )
    return SimplicialComplex.from_facets(
        len(fan.rays), ([i + 1 for i in cone] for cone in fan.maximal_cones)
    )


def certify_sphere(c: GoodSystemCandidate, method: str = "rref") -> SphereCertificate:
    """Certify that the associated complex is a rationally starshaped sphere."""
    if is_good_system(c) is not Verdict.GOOD:
        raise CertificationFailed("good_system", "input is not a good system")
    cK = condition_K_normalize(c)
    try:
        maps = build_lattice_maps(cK, method)
        fan = project_fan(cK, maps=maps)
    except (RankDeficient, CollapsedRay, NonSimplicialImage) as exc:
        raise CertificationFailed("projection", str(exc)) from exc
    if not intersect_cones_face_check(fan):
        raise CertificationFailed("fan", "cones do not meet along common faces")
    try:
        complete = fan_is_complete(fan)
    except NotFullDimensional as exc:
        raise CertificationFailed("completeness", str(exc)) from exc
    if not complete:
        raise CertificationFailed("completeness", "fan support is not the whole space")
    K = associated_complex(c.E)
    if underlying_complex(fan) != K:
        raise CertificationFailed("isomorphism", "underlying complex differs from the associated complex")
    return SphereCertificate(K, fan, c.n - 2 * c.m - 2, tuple([0] * fan.rank))


def kernel_order(c: GoodSystemCandidate) -> int:
    """Order of the finite kernel of the exponent map of the algebraic action."""
    F = exponent_matrix(c)
    if eg.rank(F) != 2 * c.m + 1:
        raise RankDeficient("exponent matrix is not of full column rank")
    return math.prod(eg.elementary_divisors(F))


def stabilizer_order(c: GoodSystemCandidate, I, require_acceptable: bool = True):
    """Order of the stabilizer of a point with support I; ``math.inf`` if infinite."""
    I = sorted(I)
    if require_acceptable and not is_acceptable(c.E, I):
        raise NotAcceptableSupport(f"{I} is not acceptable")
    vecs = _integer_vectors(c)
    if c.m == 0:
        return 1
    base = vecs[I[0] - 1]
    diffs = [[a - b for a, b in zip(vecs[i - 1], base)] for i in I[1:]]
    if not diffs or eg.rank(diffs) < 2 * c.m:
        return math.inf
    return math.prod(d for d in eg.elementary_divisors(diffs) if d)
