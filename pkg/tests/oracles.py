"""Slow, independent reference computations used to cross-check the library."""

import itertools
import math
from fractions import Fraction


def det_int(A):
    # Laplace expansion: no elimination, no shared code with exactgeom
    n = len(A)
    if n == 0:
        return 1
    if n == 1:
        return A[0][0]
    return sum(
        (-1) ** j * A[0][j] * det_int([row[:j] + row[j + 1:] for row in A[1:]])
        for j in range(n)
        if A[0][j]
    )


def minors(A, k):
    rows, cols = len(A), len(A[0]) if A else 0
    for I in itertools.combinations(range(rows), k):
        for J in itertools.combinations(range(cols), k):
            yield det_int([[A[i][j] for j in J] for i in I])


def divisors_from_minors(A):
    """Elementary divisors via d_k = gcd(k-minors) / gcd((k-1)-minors)."""
    out, prev = [], 1
    for k in range(1, min(len(A), len(A[0])) + 1):
        g = 0
        for m in minors(A, k):
            g = math.gcd(g, m)
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def count_torsion_solutions(A):
    """|{x in (Z/B)^c : A x = 0 mod B}| for B = |first nonzero maximal minor|.

    When A (r x c, r >= c) has full column rank this is the order of the
    finite group {t in torus^c : chi^{rows}(t) = 1}, since B kills it.
    """
    c = len(A[0])
    B = next(abs(m) for m in minors(A, c) if m)
    count = 0
    for x in itertools.product(range(B), repeat=c):
        if all(sum(a * b for a, b in zip(row, x)) % B == 0 for row in A):
            count += 1
    return count


def brute_force_vertices(Aeq, beq):
    """Vertices of {x >= 0 : Aeq x = beq} by trying every support set."""
    n = len(Aeq[0])
    found = set()
    for size in range(0, n + 1):
        for S in itertools.combinations(range(n), size):
            sol = _unique_solution_on_support(Aeq, beq, S, n)
            if sol is not None and all(x >= 0 for x in sol):
                found.add(tuple(sol))
    return found


def _unique_solution_on_support(Aeq, beq, S, n):
    # Gauss-Jordan on the columns in S; returns None unless the solution is unique
    M = [[Fraction(row[j]) for j in S] + [Fraction(b)] for row, b in zip(Aeq, beq)]
    r, piv = 0, []
    for col in range(len(S)):
        p = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if p is None:
            return None
        M[r], M[p] = M[p], M[r]
        M[r] = [x / M[r][col] for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        piv.append(col)
        r += 1
    if any(row[-1] != 0 for row in M[r:]):
        return None
    x = [Fraction(0)] * n
    for i, col in enumerate(piv):
        x[S[col]] = M[i][-1]
    return x
