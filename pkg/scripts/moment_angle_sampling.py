"""Sample exact points of the polydisk and compare the two descriptions of
the moment-angle complex; check the quotient map on rotated pairs."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from lvmb import catalog as C
from lvmb.combinatorics import associated_complex, indispensable_elements
from lvmb.inverse import inverse_construct
from lvmb.momentangle import (
    SamplingConfig,
    abs2,
    circle_point,
    in_M1hat,
    in_moment_angle,
    quotient_map_check,
    sample_complex_points,
    sample_points,
    scale_point,
)


@dataclass(frozen=True)
class ExperimentConfig:
    samples: int = 1000
    seed: int = 0


def families():
    out = {"square_family": C.square_family(), "two_triangles": C.two_triangles()}
    for name, make in C.SPHERES.items():
        out[f"inverse_{name}"] = inverse_construct(make()).system.E
    return out


def run(cfg: ExperimentConfig):
    sc = SamplingConfig(samples=cfg.samples, seed=cfg.seed)
    for name, E in families().items():
        K = associated_complex(E)
        pts = list(sample_points(E.n, sc)) + list(sample_complex_points(K, sc))
        inside = sum(in_moment_angle(K, z) for z in pts)
        bad = sum(in_moment_angle(K, z) != in_M1hat(E, z) for z in pts)
        line = f"{name}: n={E.n} samples={len(pts)} inside={inside} disagreements={bad}"
        if E.n in indispensable_elements(E):
            zs = [z for z in pts if in_moment_angle(K, z) and abs2(z[-1]) == 1]
            fails = sum(
                not quotient_map_check(E, z, scale_point(circle_point(Fraction(i % 9, 2)), z))
                for i, z in enumerate(zs)
            )
            line += f" quotient_pairs={len(zs)} quotient_failures={fails}"
        print(line)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    run(ExperimentConfig(args.samples, args.seed))


if __name__ == "__main__":
    main()
