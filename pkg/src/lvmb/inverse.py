"""From a starshaped sphere realization back to a good system.

The constructed ground sets are relabeled to {1, ..., n} immediately:

* even v: the extra label 0 becomes 1, vertex j becomes j + 1, and the d + 1
  extra indices v + i become v + i + 1;
* odd v: the extra leading index (-1) becomes 1, 0 becomes 2 and every other
  label j becomes j + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactgeom as eg
from .combinatorics import (
    SimplicialComplex,
    associated_complex,
    validate_fundamental_set,
)
from .errors import CertificationFailed, DimensionMismatch, NotFullDimensional, NotGood, NotStarshaped
from .goodsystem import GoodSystemCandidate, Verdict, is_good_system
from .toric import Fan, certify_sphere, fan_is_complete, intersect_cones_face_check


@dataclass(frozen=True)
class SphereRealization:
    complex: SimplicialComplex
    vertices: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return self.complex.dimension

    @property
    def v(self) -> int:
        return len(self.vertices)

    @classmethod
    def build(cls, facets, vertices) -> "SphereRealization":
        verts = tuple(tuple(int(x) for x in p) for p in vertices)
        K = SimplicialComplex.from_facets(len(verts), facets)
        return cls(K, verts)


@dataclass(frozen=True)
class InverseResult:
    system: GoodSystemCandidate
    label_map: dict  # sphere vertex -> label in the constructed ground set


def realization_fan(r: SphereRealization) -> Fan:
    rays = tuple(eg.primitive(x) for x in r.vertices)
    cones = tuple(tuple(j - 1 for j in f) for f in r.complex.facets)
    return Fan(r.d + 1, rays, cones)


def _check_shape(r: SphereRealization):
    if not r.complex.pure:
        raise DimensionMismatch("sphere complex must be pure")
    if r.complex.ground != r.v:
        raise DimensionMismatch("need exactly one vertex coordinate per ground element")
    if any(len(x) != r.d + 1 for x in r.vertices):
        raise DimensionMismatch(f"vertices must live in Z^{r.d + 1}")


def check_starshaped(r: SphereRealization) -> bool:
    """0 is in the kernel: the cones over the faces form a complete simplicial fan."""
    _check_shape(r)
    if any(not any(x) for x in r.vertices):
        return False
    if set(r.complex.vertices) != set(range(1, r.v + 1)):
        return False
    fan = realization_fan(r)
    if not intersect_cones_face_check(fan):
        return False
    try:
        return fan_is_complete(fan)
    except NotFullDimensional:
        return False


def inverse_construct(r: SphereRealization) -> InverseResult:
    if not check_starshaped(r):
        raise NotStarshaped("realization is not starshaped around 0")
    v, d = r.v, r.d
    rows = [[r.vertices[j][i] for j in range(v)] for i in range(d + 1)]  # x^1 .. x^{d+1}
    ground = set(range(1, v + d + 2))
    base = [sorted(ground - set(f)) for f in r.complex.facets]

    if v % 2 == 0:
        shift = 1
        subsets = [[1] + [p + shift for p in P] for P in base]
        dim = v
        vectors = [[0] * dim]
        vectors += [[int(i == j) for i in range(dim)] for j in range(v)]
        vectors += [[-x for x in row] for row in rows]
        n = v + d + 2
    else:
        shift = 2
        subsets = [[1, 2] + [p + shift for p in P] for P in base]
        dim = v + 1
        # labels -1, 0, 1..v, v+1..v+d+1 carry 0, e_0, e_1..e_v, (0, -x^i)
        vectors = [[0] * dim]
        vectors += [[int(i == j) for i in range(dim)] for j in range(v + 1)]
        vectors += [[0] + [-x for x in row] for row in rows]
        n = v + d + 3
    E = validate_fundamental_set(subsets, n)
    c = GoodSystemCandidate(E, tuple(tuple(Fraction(x) for x in vec) for vec in vectors))
    label_map = {j: j + shift for j in range(1, v + 1)}
    return InverseResult(c, label_map)


def round_trip_check(r: SphereRealization) -> bool:
    res = inverse_construct(r)
    K = associated_complex(res.system.E)
    if K != r.complex.relabel(res.label_map, res.system.n):
        return False
    try:
        cert = certify_sphere(res.system)
    except CertificationFailed:
        return False
    return cert.dimension == r.d


def augment_circles(c: GoodSystemCandidate, check: bool = True) -> GoodSystemCandidate:
    """Append two indispensable indices (two extra circle factors)."""
    if check and is_good_system(c) is not Verdict.GOOD:
        raise NotGood("circle augmentation needs a good system")
    n = c.n
    zero = Fraction(0)
    l = [tuple(lj) + (Fraction(-1), Fraction(-1)) for lj in c.l]
    pad = tuple([zero] * (2 * c.m))
    l.append(pad + (Fraction(1), Fraction(-1)))
    l.append(pad + (zero, Fraction(1)))
    E = validate_fundamental_set([list(P) + [n + 1, n + 2] for P in c.E.subsets], n + 2)
    return GoodSystemCandidate(E, tuple(l))
