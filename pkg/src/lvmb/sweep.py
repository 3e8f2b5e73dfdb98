"""Exhaustive enumeration of small fundamental sets and the two SEU oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .combinatorics import (
    FundamentalSet,
    associated_complex,
    check_SEU,
    check_SEU_via_ridges,
    minimality_equivalence_check,
)


@dataclass(frozen=True)
class SweepConfig:
    n_max: int = 6
    sizes: tuple[int, ...] = (2, 3)  # values of M
    max_members: int = 6


@dataclass
class SweepReport:
    families: int = 0
    seu_families: int = 0
    minimality_checked: int = 0
    seu_discrepancies: list = field(default_factory=list)
    minimality_discrepancies: list = field(default_factory=list)


def enumerate_families(cfg: SweepConfig) -> Iterator[FundamentalSet]:
    """Every nonempty family of M-subsets of {1..n}, no deduplication."""
    for n in range(1, cfg.n_max + 1):
        for M in cfg.sizes:
            if M > n:
                continue
            pool = list(itertools.combinations(range(1, n + 1), M))
            for size in range(1, min(cfg.max_members, len(pool)) + 1):
                for fam in itertools.combinations(pool, size):
                    yield FundamentalSet(n, fam)


def run_sweep(cfg: SweepConfig) -> SweepReport:
    rep = SweepReport()
    for E in enumerate_families(cfg):
        rep.families += 1
        K = associated_complex(E)
        seu = check_SEU(E)
        if seu != check_SEU_via_ridges(K):
            rep.seu_discrepancies.append(E)
        if seu:
            rep.seu_families += 1
            if E.n > E.M:
                rep.minimality_checked += 1
                if not minimality_equivalence_check(E):
                    rep.minimality_discrepancies.append(E)
    return rep
