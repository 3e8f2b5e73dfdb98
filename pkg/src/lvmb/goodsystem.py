"""Acceptable and good systems, LVM witnesses, Siegel translation, polytope.

Vectors ``l_j`` in C^m are stored as real vectors of length 2m, real parts
first and imaginary parts after.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactgeom as eg
from .combinatorics import (
    FundamentalSet,
    associated_complex,
    check_SE,
    validate_fundamental_set,
)
from .errors import (
    DimensionMismatch,
    Infeasible,
    InvalidWitness,
    NotAcceptableSystem,
    SiegelViolated,
    UnsupportedDimension,
    WitnessNotFound,
)

Vec = tuple[Fraction, ...]


@dataclass(frozen=True)
class GoodSystemCandidate:
    E: FundamentalSet
    l: tuple[Vec, ...]

    def __post_init__(self):
        if self.E.M % 2 == 0:
            raise DimensionMismatch(f"M = {self.E.M} must be odd")
        if len(self.l) != self.E.n:
            raise DimensionMismatch(f"expected {self.E.n} vectors, got {len(self.l)}")
        if any(len(v) != 2 * self.m for v in self.l):
            raise DimensionMismatch(f"every vector must have {2 * self.m} real coordinates")

    @classmethod
    def build(cls, subsets, n: int, vectors) -> "GoodSystemCandidate":
        E = validate_fundamental_set(subsets, n)
        return cls(E, tuple(tuple(eg.as_fraction(x) for x in v) for v in vectors))

    @property
    def m(self) -> int:
        return (self.E.M - 1) // 2

    @property
    def n(self) -> int:
        return self.E.n

    def points(self, idx) -> list[Vec]:
        return [self.l[i - 1] for i in idx]


def complex_vectors(values) -> tuple[Vec, ...]:
    """Turn Python complex-like ``(re, im)`` pairs or Gaussian ints into R^2 vectors."""
    out = []
    for z in values:
        if isinstance(z, complex):
            raise TypeError("use (re, im) pairs of exact numbers, not complex floats")
        re, im = z
        out.append((eg.as_fraction(re), eg.as_fraction(im)))
    return tuple(out)


class Verdict(str, enum.Enum):
    GOOD = "good"
    FAILS_SE = "fails_SE"
    FAILS_IMBRICATION = "fails_imbrication"
    FAILS_ACCEPTABLE = "fails_acceptable"


@dataclass(frozen=True)
class LVMWitness:
    v: Vec


def is_acceptable_system(c: GoodSystemCandidate) -> bool:
    if c.m == 0:
        return True
    return all(eg.affine_span_dimension(c.points(P)) == 2 * c.m for P in c.E.subsets)


def hulls_interiors_meet(c: GoodSystemCandidate, P, Q) -> bool:
    """Strictly positive barycentric coordinates for a common point of both hulls."""
    dim = 2 * c.m
    p_pts, q_pts = c.points(P), c.points(Q)
    rows = []
    for d in range(dim):
        rows.append([pt[d] for pt in p_pts] + [-pt[d] for pt in q_pts])
    rows.append([1] * len(p_pts) + [0] * len(q_pts))
    rows.append([0] * len(p_pts) + [1] * len(q_pts))
    rhs = [0] * dim + [1, 1]
    ok, _ = eg.lp_feasible_strict(rows, rhs, range(len(p_pts) + len(q_pts)))
    return ok


def _pair_job(args):
    c, P, Q = args
    return hulls_interiors_meet(c, P, Q)


def imbrication(c: GoodSystemCandidate, jobs: int = 1) -> bool:
    if not is_acceptable_system(c):
        raise NotAcceptableSystem("imbrication needs full-dimensional hulls")
    pairs = list(itertools.combinations(c.E.subsets, 2))
    if jobs > 1 and len(pairs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return all(pool.map(_pair_job, [(c, P, Q) for P, Q in pairs]))
    return all(hulls_interiors_meet(c, P, Q) for P, Q in pairs)


def is_good_system(c: GoodSystemCandidate, jobs: int = 1) -> Verdict:
    # acceptability is checked before imbrication, which presupposes it
    if not check_SE(c.E):
        return Verdict.FAILS_SE
    if not is_acceptable_system(c):
        return Verdict.FAILS_ACCEPTABLE
    if not imbrication(c, jobs=jobs):
        return Verdict.FAILS_IMBRICATION
    return Verdict.GOOD


def hull_recovery_set(c: GoodSystemCandidate, v) -> tuple[tuple[int, ...], ...]:
    """All (2m+1)-subsets P with v in Conv(l_p, p in P)."""
    out = []
    for P in itertools.combinations(range(1, c.n + 1), 2 * c.m + 1):
        if eg.in_convex_hull(c.points(P), v)[0]:
            out.append(P)
    return tuple(out)


def verify_lvm_witness(c: GoodSystemCandidate, v) -> bool:
    v = tuple(eg.as_fraction(x) for x in v)
    if len(v) != 2 * c.m:
        raise DimensionMismatch("witness has the wrong dimension")
    for S in itertools.combinations(range(1, c.n + 1), 2 * c.m):
        if eg.in_convex_hull(c.points(S), v)[0]:
            return False
    return hull_recovery_set(c, v) == c.E.subsets


# -- planar search (m = 1) -------------------------------------------------


def _orient(a, b, p) -> Fraction:
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])


def _on_segment(a, b, p) -> bool:
    if _orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _in_triangle(a, b, c, p) -> bool:
    # callers have already excluded p from every segment, which covers the
    # flat (collinear) triangles
    if _orient(a, b, c) == 0:
        return False
    s = [_orient(a, b, p), _orient(b, c, p), _orient(c, a, p)]
    return all(x >= 0 for x in s) or all(x <= 0 for x in s)


def _planar_signature(pts, p):
    """Fast exact version of the two witness conditions for m = 1."""
    n = len(pts)
    for i, j in itertools.combinations(range(n), 2):
        if _on_segment(pts[i], pts[j], p):
            return None
    return tuple(
        tuple(x + 1 for x in T)
        for T in itertools.combinations(range(n), 3)
        if _in_triangle(pts[T[0]], pts[T[1]], pts[T[2]], p)
    )


def arrangement_sample_points(pts) -> list[Vec]:
    """One rational point in every open cell of the arrangement of lines
    through pairs of distinct points.

    Every face of the segment arrangement contains such a cell, so these
    samples meet every connected component of the complement of all segments.
    """
    distinct = sorted(set(pts))
    lines = set()
    for a, b in itertools.combinations(distinct, 2):
        # a x + b y = c, normalised
        A = b[1] - a[1]
        B = a[0] - b[0]
        C = A * a[0] + B * a[1]
        lead = A if A != 0 else B
        lines.add((A / lead, B / lead, C / lead))
    lines = sorted(lines)
    xs = set()
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(lines, 2):
        d = a1 * b2 - a2 * b1
        if d != 0:
            xs.add((c1 * b2 - c2 * b1) / d)
    for a, b, c in lines:
        if b == 0:
            xs.add(c / a)
    xs = sorted(xs)
    if not xs:
        slab_x = [Fraction(0)]
    else:
        slab_x = [xs[0] - 1] + [(p + q) / 2 for p, q in zip(xs, xs[1:])] + [xs[-1] + 1]
    samples = []
    for x in slab_x:
        ys = sorted({(c - a * x) / b for a, b, c in lines if b != 0})
        if not ys:
            samples.append((x, Fraction(0)))
            continue
        cand = [ys[0] - 1] + [(p + q) / 2 for p, q in zip(ys, ys[1:])] + [ys[-1] + 1]
        samples.extend((x, y) for y in cand)
    return samples


@dataclass(frozen=True)
class WitnessSearchConfig:
    exact: bool = False  # demand a decision procedure (only available for m <= 1)
    budget: int = 2000  # candidate points tried when m >= 2
    perturbation_depth: int = 6


def common_interior_point(c: GoodSystemCandidate):
    """A point with strictly positive barycentric coordinates in every member
    hull, or None. Any witness lies in the intersection of these hulls."""
    dim = 2 * c.m
    M = c.E.M
    blocks = len(c.E.subsets)
    width = blocks * M
    rows, rhs = [], []
    for b in range(blocks):
        row = [0] * width
        row[b * M:(b + 1) * M] = [1] * M
        rows.append(row)
        rhs.append(1)
    for b in range(1, blocks):
        P, Q = c.E.subsets[0], c.E.subsets[b]
        for d in range(dim):
            row = [0] * width
            row[0:M] = [c.l[p - 1][d] for p in P]
            row[b * M:(b + 1) * M] = [-c.l[q - 1][d] for q in Q]
            rows.append(row)
            rhs.append(0)
    ok, x = eg.lp_feasible_strict(rows, rhs, range(width))
    if not ok:
        return None
    P = c.E.subsets[0]
    return tuple(sum(x[i] * c.l[p - 1][d] for i, p in enumerate(P)) for d in range(dim))


def _candidates_high_dim(c: GoodSystemCandidate, cfg: WitnessSearchConfig):
    dim = 2 * c.m
    centre = common_interior_point(c)
    if centre is None:
        return
    yield centre
    bary = [centre]
    for P in c.E.subsets:
        pts = c.points(P)
        bary.append(tuple(sum(p[d] for p in pts) / len(pts) for d in range(dim)))
    yield from bary
    direction = [Fraction(d + 1) for d in range(dim)]
    for depth in range(1, cfg.perturbation_depth + 1):
        eps = Fraction(1, 2**depth)
        for b in bary:
            for sign in (1, -1):
                yield tuple(x + sign * eps * u / (u + 1) for x, u in zip(b, direction))


def _simplest_planar_witness(c: GoodSystemCandidate, p, depth: int, max_grid: int = 4096):
    """Replace a valid witness by the first valid dyadic point (coarsest grid,
    then lexicographic) inside the common bounding box of the members' hulls,
    so the reported witness does not depend on arrangement bookkeeping."""
    pts = list(c.l)
    lo = [max(min(pts[i - 1][d] for i in P) for P in c.E.subsets) for d in range(2)]
    hi = [min(max(pts[i - 1][d] for i in P) for P in c.E.subsets) for d in range(2)]
    for k in range(depth + 1):
        q = 2**k
        xs = range(math.ceil(lo[0] * q), math.floor(hi[0] * q) + 1)
        ys = range(math.ceil(lo[1] * q), math.floor(hi[1] * q) + 1)
        if len(xs) * len(ys) > max_grid:
            break
        for a in xs:
            for b in ys:
                cand = (Fraction(a, q), Fraction(b, q))
                if _planar_signature(pts, cand) == c.E.subsets and verify_lvm_witness(c, cand):
                    return cand
    return tuple(p)


def find_lvm_witness(c: GoodSystemCandidate, config: WitnessSearchConfig | None = None) -> LVMWitness:
    """Search for a point v certifying that the good system is LVM.

    Raises WitnessNotFound; ``conclusive`` tells whether the search was exact.
    """
    cfg = config or WitnessSearchConfig()
    if c.m == 0:
        if verify_lvm_witness(c, ()):
            return LVMWitness(())
        raise WitnessNotFound("no witness in R^0", conclusive=True)
    if c.m == 1:
        pts = list(c.l)
        target = c.E.subsets
        seen = set()
        for p in arrangement_sample_points(pts):
            sig = _planar_signature(pts, p)
            if sig is None or sig in seen:
                continue
            seen.add(sig)
            if sig == target and verify_lvm_witness(c, p):
                return LVMWitness(_simplest_planar_witness(c, p, cfg.perturbation_depth))
        raise WitnessNotFound("no arrangement face reproduces the fundamental set", conclusive=True)
    if cfg.exact:
        raise UnsupportedDimension(f"exact witness search is only implemented for m <= 1 (m = {c.m})")
    for i, p in enumerate(_candidates_high_dim(c, cfg)):
        if i >= cfg.budget:
            break
        if verify_lvm_witness(c, p):
            return LVMWitness(tuple(p))
    raise WitnessNotFound("candidate budget exhausted", conclusive=False)


def siegel_translate(c: GoodSystemCandidate, w: LVMWitness | Sequence) -> GoodSystemCandidate:
    v = w.v if isinstance(w, LVMWitness) else tuple(eg.as_fraction(x) for x in w)
    if not verify_lvm_witness(c, v):
        raise InvalidWitness(f"{v} is not an LVM witness for this system")
    return GoodSystemCandidate(c.E, tuple(tuple(a - b for a, b in zip(lj, v)) for lj in c.l))


def associated_polytope(c: GoodSystemCandidate) -> eg.QPolytope:
    dim = 2 * c.m
    rows = [[lj[d] for lj in c.l] for d in range(dim)] + [[1] * c.n]
    rhs = [0] * dim + [1]
    try:
        return eg.vertex_enumeration(rows, rhs)
    except Infeasible as exc:
        raise SiegelViolated("0 is not in the convex hull of the vectors") from exc


def duality_check(c: GoodSystemCandidate) -> bool:
    """I is a face of the associated complex iff 0 lies in Conv(l_k, k not in I)."""
    origin = [0] * (2 * c.m)
    if not eg.in_convex_hull(list(c.l), origin)[0]:
        raise SiegelViolated("0 is not in the convex hull of the vectors")
    K = associated_complex(c.E)
    ground = range(1, c.n + 1)
    for r in range(c.n + 1):
        for I in itertools.combinations(ground, r):
            comp = [j for j in ground if j not in I]
            in_hull = eg.in_convex_hull(c.points(comp), origin)[0]
            if in_hull != K.has_face(I):
                return False
    return True

