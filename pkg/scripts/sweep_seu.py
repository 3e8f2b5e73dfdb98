"""Exhaustive sweep: SEU by substitutes vs. two facets per ridge, and
SEU-minimality vs. pseudo-manifold, over all small families."""

import argparse
import time
from dataclasses import asdict

from lvmb.sweep import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-members", type=int, default=6)
    args = ap.parse_args()
    cfg = SweepConfig(n_max=args.n_max, sizes=tuple(args.sizes), max_members=args.max_members)
    t = time.perf_counter()
    rep = run_sweep(cfg)
    print("config:", asdict(cfg))
    print(f"families: {rep.families}")
    print(f"SEU families: {rep.seu_families}")
    print(f"SEU oracle discrepancies: {len(rep.seu_discrepancies)}")
    print(f"minimality checks (n > M): {rep.minimality_checked}")
    print(f"minimality discrepancies: {len(rep.minimality_discrepancies)}")
    print(f"seconds: {time.perf_counter() - t:.2f}")
    for E in rep.seu_discrepancies[:5] + rep.minimality_discrepancies[:5]:
        print("  counterexample:", E.n, E.subsets)


if __name__ == "__main__":
    main()
