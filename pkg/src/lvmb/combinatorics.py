"""Fundamental sets, their associated complexes and the SE/SEU calculus.

Sets are stored as sorted tuples of 1-based integers and families as sorted
tuples of those, so every output has a canonical, diffable order.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    DegenerateNM,
    Duplicate,
    EmptyFamily,
    MixedCardinality,
    NotPure,
    OutOfRange,
    SEUViolated,
)

Subset = tuple[int, ...]


def _canon(s: Iterable[int]) -> Subset:
    return tuple(sorted(s))


@dataclass(frozen=True)
class FundamentalSet:
    """A nonempty family of M-subsets of {1, ..., n}."""

    n: int
    subsets: tuple[Subset, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(frozenset(s) for s in self.subsets))

    @property
    def M(self) -> int:
        return len(self.subsets[0])

    @property
    def k(self) -> int:
        return len(indispensable_elements(self))

    @property
    def type(self) -> tuple[int, int, int]:
        return (self.M, self.n, self.k)

    def __contains__(self, s) -> bool:
        return frozenset(s) in self._members

    def __len__(self) -> int:
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on {1, ..., ground} given by inclusion-incomparable facets.

    ``SimplicialComplex(n, ((),))`` is the complex {empty set}.
    """

    ground: int
    facets: tuple[Subset, ...]

    @classmethod
    def from_facets(cls, ground: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        fs = sorted({_canon(f) for f in facets})
        if not fs:
            raise EmptyFamily("a complex needs at least one facet")
        for f in fs:
            if any(x < 1 or x > ground for x in f):
                raise OutOfRange(f"facet {f} not inside {{1..{ground}}}")
        sets = [frozenset(f) for f in fs]
        for a, b in itertools.permutations(sets, 2):
            if a < b:
                raise ValueError(f"facet {sorted(a)} is contained in {sorted(b)}")
        return cls(ground, tuple(fs))

    @property
    def pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> Subset:
        return _canon(set().union(*map(set, self.facets)))

    def has_face(self, s: Iterable[int]) -> bool:
        s = set(s)
        return any(s <= set(f) for f in self.facets)

    def relabel(self, mapping: dict[int, int], ground: int) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(ground, ([mapping[x] for x in f] for f in self.facets))

    def ridges(self) -> Counter:
        """Count, for each ridge, the number of facets containing it."""
        if not self.pure:
            raise NotPure("ridges are only defined here for pure complexes")
        counts: Counter = Counter()
        if self.dimension < 0:
            return counts  # {∅} has no ridges
        for f in self.facets:
            for r in itertools.combinations(f, len(f) - 1):
                counts[r] += 1
        return counts


@dataclass(frozen=True)
class ReplacementGraph:
    nodes: tuple[Subset, ...]
    edges: tuple[tuple[Subset, Subset], ...]

    def components(self) -> list[list[Subset]]:
        adj = {v: [] for v in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = set()
        comps = []
        for v in self.nodes:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return sorted(comps)

    @property
    def connected(self) -> bool:
        return len(self.components()) <= 1


def validate_fundamental_set(raw, n: int) -> FundamentalSet:
    if n < 1:
        raise ValueError("n must be positive")
    raw = [list(s) for s in raw]
    if not raw:
        raise EmptyFamily("a fundamental set is nonempty")
    M = len(set(raw[0]))
    canon = []
    for s in raw:
        if len(set(s)) != len(s):
            raise Duplicate(f"repeated element inside {s}")
        if len(s) != M:
            raise MixedCardinality(f"member {sorted(s)} has {len(s)} elements, expected {M}")
        if any(x < 1 or x > n for x in s):
            raise OutOfRange(f"member {sorted(s)} not inside {{1..{n}}}")
        canon.append(_canon(s))
    if len(set(canon)) != len(canon):
        raise Duplicate("repeated fundamental subset")
    return FundamentalSet(n, tuple(sorted(canon)))


def indispensable_elements(E: FundamentalSet) -> Subset:
    common = set(E.subsets[0])
    for s in E.subsets[1:]:
        common &= set(s)
    return _canon(common)


def is_acceptable(E: FundamentalSet, P: Iterable[int]) -> bool:
    P = set(P)
    if any(x < 1 or x > E.n for x in P):
        raise OutOfRange(f"{sorted(P)} not inside {{1..{E.n}}}")
    return any(set(F) <= P for F in E.subsets)


def associated_complex(E: FundamentalSet) -> SimplicialComplex:
    full = set(range(1, E.n + 1))
    return SimplicialComplex(E.n, tuple(sorted(_canon(full - set(F)) for F in E.subsets)))


def fundamental_set_from_complex(K: SimplicialComplex, n: int | None = None) -> FundamentalSet:
    """Inverse of :func:`associated_complex` on ground {1..n} (default K.ground).

    Elements of {1..n} outside every facet become indispensable.
    """
    n = K.ground if n is None else n
    full = set(range(1, n + 1))
    return validate_fundamental_set([full - set(f) for f in K.facets], n)


def _substitutes(E: FundamentalSet, P: Subset, k: int) -> list[int]:
    return [kp for kp in P if (set(P) - {kp}) | {k} in E]


def check_SE(E: FundamentalSet) -> bool:
    return all(_substitutes(E, P, k) for P in E.subsets for k in range(1, E.n + 1))


def check_SEU(E: FundamentalSet) -> bool:
    return all(len(_substitutes(E, P, k)) == 1 for P in E.subsets for k in range(1, E.n + 1))


def check_SEU_via_ridges(K: SimplicialComplex) -> bool:
    """Every ridge lies in exactly two facets."""
    return all(c == 2 for c in K.ridges().values())


def replacement_graph(E: FundamentalSet) -> ReplacementGraph:
    edges = []
    for a, b in itertools.combinations(E.subsets, 2):
        if len(set(a) ^ set(b)) == 2:
            edges.append((a, b))
    return ReplacementGraph(E.subsets, tuple(edges))


def decompose_minimal(E: FundamentalSet) -> list[FundamentalSet]:
    """Split an SEU family into its SEU-minimal pieces (components of the graph)."""
    if not check_SEU(E):
        raise SEUViolated("decomposition requires the SEU property")
    return [FundamentalSet(E.n, tuple(c)) for c in replacement_graph(E).components()]


def is_seu_minimal(E: FundamentalSet) -> bool:
    return check_SEU(E) and replacement_graph(E).connected


def facet_graph_connected(K: SimplicialComplex) -> bool:
    facets = list(K.facets)
    if K.dimension < 0:
        return True
    by_ridge: dict = {}
    for i, f in enumerate(facets):
        for r in itertools.combinations(f, len(f) - 1):
            by_ridge.setdefault(r, []).append(i)
    parent = list(range(len(facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for members in by_ridge.values():
        for j in members[1:]:
            parent[find(j)] = find(members[0])
    return len({find(i) for i in range(len(facets))}) == 1


def is_pseudo_manifold(K: SimplicialComplex) -> bool:
    if not K.pure:
        raise NotPure("pseudo-manifold test needs a pure complex")
    if K.facets == ((),):
        return False
    return check_SEU_via_ridges(K) and facet_graph_connected(K)


def minimality_equivalence_check(E: FundamentalSet) -> bool:
    """True when [E minimal for SEU] and [its complex is a pseudo-manifold] agree."""
    if E.n == E.M:
        raise DegenerateNM("the equivalence needs n > M")
    return is_seu_minimal(E) == is_pseudo_manifold(associated_complex(E))
