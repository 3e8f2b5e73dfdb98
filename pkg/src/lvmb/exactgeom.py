"""Exact rational and integer linear algebra.

Everything here works on plain Python lists of :class:`fractions.Fraction`
(or ``int``) so that every predicate downstream is decided without rounding.
Matrices are row-major lists of rows.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch, EmptyInput, Infeasible

Rat = Fraction


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    return Fraction(x)


def qmatrix(rows) -> list[list[Fraction]]:
    return [[as_fraction(x) for x in row] for row in rows]


def zmatrix(rows) -> list[list[int]]:
    out = []
    for row in rows:
        r = []
        for x in row:
            f = as_fraction(x)
            if f.denominator != 1:
                raise ValueError(f"non-integer entry {f}")
            r.append(int(f))
        out.append(r)
    return out


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    Bt = transpose(B) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def rref(A) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (R, pivot columns)."""
    R = qmatrix(A)
    if not R:
        return R, []
    rows, cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r][c]
        R[r] = [x / piv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(A) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def det(A) -> Fraction:
    """Determinant of a square matrix by fraction-exact elimination."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatch("determinant of a non-square matrix")
    M = qmatrix(A)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def solve_square(B, b) -> Optional[list[Fraction]]:
    """Solve B x = b for square B; None when B is singular."""
    n = len(B)
    aug = [list(row) + [rhs] for row, rhs in zip(qmatrix(B), qmatrix([b])[0])]
    R, piv = rref(aug)
    if piv != list(range(n)):
        return None
    return [R[i][n] for i in range(n)]


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = math.gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector, same direction."""
    v = [as_fraction(x) for x in v]
    L = 1
    for x in v:
        L = L * x.denominator // math.gcd(L, x.denominator)
    return primitive([int(x * L) for x in v])


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == D`` with U, V unimodular and D diagonal, d1 | d2 | ..."""

    U: list
    D: list
    V: list

    @property
    def divisors(self) -> list[int]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]


def smith_normal_form(A) -> SNFResult:
    A = zmatrix(A)
    m = len(A)
    n = len(A[0]) if m else 0
    D = [row[:] for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in D:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, D[i][t] // D[t][t])
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, D[t][j] // D[t][t])
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SNFResult(U=U, D=D, V=V)


def elementary_divisors(A) -> list[int]:
    return smith_normal_form(A).divisors


# ---------------------------------------------------------------------------
# kernels and spans


def rational_kernel_basis(A) -> list[tuple[int, ...]]:
    """Basis of the right null space of A, each vector integral with content 1.

    The returned vectors are the columns of the basis matrix. Each is signed
    so its first nonzero entry is positive.
    """
    A = qmatrix(A)
    if not A:
        return []
    cols = len(A[0])
    R, piv = rref(A)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -R[r][f]
        w = clear_denominators(v)
        if next(x for x in w if x != 0) < 0:
            w = tuple(-x for x in w)
        basis.append(w)
    return basis


def affine_span_dimension(points) -> int:
    if not points:
        raise EmptyInput("affine span of an empty point set")
    pts = qmatrix(points)
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    if not diffs or not base:
        return 0
    return rank(diffs)


# ---------------------------------------------------------------------------
# linear programming


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: Optional[list[Fraction]] = None
    value: Optional[Fraction] = None


def _pivot(T, obj, basis, r, c):
    piv = T[r][c]
    T[r] = [x / piv for x in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], T[r])]
    if obj[c] != 0:
        f = obj[c]
        obj[:] = [a - f * b for a, b in zip(obj, T[r])]
    basis[r] = c


def _run_simplex(T, obj, basis, allowed):
    """Maximise with Bland's rule. ``obj`` holds reduced costs, last entry -value."""
    while True:
        enter = next((j for j in allowed if obj[j] > 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, obj, basis, best[1], enter)


def lp_maximize(A, b, c) -> LPResult:
    """Maximise ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly over Q.

    Two-phase simplex with Bland's anti-cycling rule.
    """
    A = qmatrix(A)
    b = [as_fraction(x) for x in b]
    c = [as_fraction(x) for x in c]
    m = len(A)
    nvar = len(c)
    if len(b) != m or any(len(row) != nvar for row in A):
        raise DimensionMismatch("inconsistent LP dimensions")
    if m == 0:
        if any(x > 0 for x in c):
            return LPResult("unbounded")
        return LPResult("optimal", [Fraction(0)] * nvar, Fraction(0))

    # phase 1: artificial variables nvar .. nvar+m-1
    T = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [sign * x for x in A[i]] + [Fraction(int(j == i)) for j in range(m)] + [sign * b[i]]
        T.append(row)
    basis = list(range(nvar, nvar + m))
    width = nvar + m + 1
    obj = [Fraction(0)] * width
    for row in T:  # maximise -sum(artificials)
        for j in range(nvar):
            obj[j] += row[j]
        obj[-1] += row[-1]
    _run_simplex(T, obj, basis, range(nvar))
    if obj[-1] != 0:
        return LPResult("infeasible")

    # drive artificials out of the basis; drop redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= nvar:
            j = next((j for j in range(nvar) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, obj, basis, i, j)
        i += 1
    T = [row[:nvar] + [row[-1]] for row in T]

    # phase 2
    obj = c + [Fraction(0)]
    for i, bj in enumerate(basis):
        if obj[bj] != 0:
            f = obj[bj]
            obj = [a - f * r for a, r in zip(obj, T[i])]
    status = _run_simplex(T, obj, basis, range(nvar))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * nvar
    for i, bj in enumerate(basis):
        x[bj] = T[i][-1]
    return LPResult("optimal", x, sum(ci * xi for ci, xi in zip(c, x)))


def lp_feasible_strict(Aeq, beq, strict_nonneg_indices=()) -> tuple[bool, Optional[list[Fraction]]]:
    """Decide ``{x : Aeq x = beq, x >= 0, x_i > 0 for flagged i}`` != {} exactly.

    Strictness is handled by maximising a margin ``t`` (capped at 1) with
    ``x_i >= t`` on the flagged coordinates; feasible iff the optimum is > 0.
    Returns ``(feasible, witness)``.
    """
    A = qmatrix(Aeq)
    b = [as_fraction(x) for x in beq]
    if len(A) != len(b):
        raise DimensionMismatch("Aeq and beq disagree on the number of rows")
    nvar = len(A[0]) if A else 0
    if any(len(row) != nvar for row in A):
        raise DimensionMismatch("ragged constraint matrix")
    strict = sorted(set(strict_nonneg_indices))
    if any(i < 0 or i >= nvar for i in strict):
        raise DimensionMismatch("strict index out of range")
    if not strict:
        res = lp_maximize(A, b, [0] * nvar)
        return (res.status == "optimal", res.x)

    s = len(strict)
    # columns: x (nvar) | t | slack s_i (s) | u (cap slack)
    total = nvar + 1 + s + 1
    rows = [list(row) + [Fraction(0)] * (total - nvar) for row in A]
    rhs = list(b)
    for k, i in enumerate(strict):
        row = [Fraction(0)] * total
        row[i] = Fraction(1)
        row[nvar] = Fraction(-1)
        row[nvar + 1 + k] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(0))
    cap = [Fraction(0)] * total
    cap[nvar] = Fraction(1)
    cap[-1] = Fraction(1)
    rows.append(cap)
    rhs.append(Fraction(1))
    c = [Fraction(0)] * total
    c[nvar] = Fraction(1)
    res = lp_maximize(rows, rhs, c)
    if res.status != "optimal" or res.value <= 0:
        return (False, None)
    return (True, res.x[:nvar])


def in_convex_hull(points, v, strict=False) -> tuple[bool, Optional[list[Fraction]]]:
    """Is ``v`` a convex combination of ``points``? Returns barycentric witness.

    With ``strict=True`` every coefficient must be positive (relative interior).
    An empty point set has empty hull.
    """
    pts = qmatrix(points)
    v = [as_fraction(x) for x in v]
    if not pts:
        return (False, None)
    dim = len(v)
    if any(len(p) != dim for p in pts):
        raise DimensionMismatch("points and query have different dimensions")
    A = [[p[d] for p in pts] for d in range(dim)] + [[Fraction(1)] * len(pts)]
    b = v + [Fraction(1)]
    return lp_feasible_strict(A, b, range(len(pts)) if strict else ())


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class QPolytope:
    """V-representation of a bounded polyhedron with exact vertices."""

    dimension: int
    vertices: tuple[tuple[Fraction, ...], ...]


def vertex_enumeration(Aeq, beq) -> QPolytope:
    """All vertices of the bounded set ``{x >= 0 : Aeq x = beq}``.

    Enumerates basic feasible solutions over column subsets of size rank(Aeq).
    """
    A = qmatrix(Aeq)
    b = [as_fraction(x) for x in beq]
    if len(A) != len(b):
        raise DimensionMismatch("Aeq and beq disagree on the number of rows")
    nvar = len(A[0]) if A else 0
    aug = [row + [rhs] for row, rhs in zip(A, b)]
    R, piv = rref(aug)
    if nvar in piv:
        raise Infeasible("equality system is inconsistent")
    # independent rows only
    R = [row for row in R[: len(piv)]]
    r = len(R)
    Ared = [row[:nvar] for row in R]
    bred = [row[nvar] for row in R]
    found = set()
    for cols in itertools.combinations(range(nvar), r):
        B = [[row[c] for c in cols] for row in Ared]
        xb = solve_square(B, bred) if r else []
        if xb is None or any(x < 0 for x in xb):
            continue
        x = [Fraction(0)] * nvar
        for c, val in zip(cols, xb):
            x[c] = val
        found.add(tuple(x))
    if not found:
        raise Infeasible("no nonnegative solution")
    return QPolytope(dimension=nvar, vertices=tuple(sorted(found)))
