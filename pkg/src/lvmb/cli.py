"""Command-line front end: ``lvmb check|complex|polytope|fan|inverse|moment-angle``.

Exit codes: 0 affirmative, 2 negative verdict, 1 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import documents
from .combinatorics import (
    associated_complex,
    check_SEU,
    decompose_minimal,
    indispensable_elements,
    is_pseudo_manifold,
)
from .errors import CertificationFailed, LVMBError, NotStarshaped, WitnessNotFound
from .goodsystem import (
    Verdict,
    find_lvm_witness,
    is_good_system,
    associated_polytope,
    duality_check,
    siegel_translate,
    verify_lvm_witness,
)
from .inverse import augment_circles, inverse_construct, round_trip_check
from .momentangle import (
    SamplingConfig,
    circle_point,
    in_M1hat,
    in_moment_angle,
    quotient_map_check,
    sample_complex_points,
    sample_points,
    scale_point,
)
from .toric import certify_sphere, condition_K_normalize, kernel_order

OK, NEGATIVE, INPUT_ERROR = 0, 2, 1


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit(report: dict, as_json: bool, stream=None):
    stream = stream or sys.stdout
    if as_json:
        stream.write(json.dumps(_jsonable(report), indent=2) + "\n")
    else:
        for key, value in report.items():
            stream.write(f"{key}: {_fmt(value)}\n")


def _facets_str(K) -> str:
    if K.facets == ((),):
        return "{∅}"
    return "{" + ", ".join("".join(map(str, f)) if K.ground < 10 else "{" + ",".join(map(str, f)) + "}"
                           for f in K.facets) + "}"


def cmd_check(args) -> int:
    c = documents.read(args.file, "good_system")
    verdict = is_good_system(c, jobs=args.jobs)
    seu = check_SEU(c.E)
    report = {
        "verdict": verdict.value,
        "type": c.E.type,
        "indispensable": list(indispensable_elements(c.E)),
        "SEU": seu,
        "minimal_SEU": seu and len(decompose_minimal(c.E)) == 1,
    }
    if args.kernel:
        report["kernel_order"] = kernel_order(condition_K_normalize(c))
    _emit(report, args.json)
    return OK if verdict is Verdict.GOOD else NEGATIVE


def cmd_complex(args) -> int:
    doc = documents.load(args.file)
    E = documents.to_fundamental_set(doc)
    K = associated_complex(E)
    report = {
        "facets": _facets_str(K),
        "dimension": K.dimension,
        "vertex_count": len(K.vertices),
        "type": E.type,
        "pseudo_manifold": is_pseudo_manifold(K),
    }
    if check_SEU(E):
        comps = decompose_minimal(E)
        report["components"] = len(comps)
        report["component_sizes"] = [len(x) for x in comps]
    else:
        report["components"] = "n/a (SEU fails)"
    _emit(report, args.json)
    return OK


def _parse_witness(text: str):
    return tuple(Fraction(x.strip()) for x in text.split(","))


def cmd_polytope(args) -> int:
    c = documents.read(args.file, "good_system")
    verdict = is_good_system(c, jobs=args.jobs)
    if verdict is not Verdict.GOOD:
        _emit({"verdict": verdict.value}, args.json)
        return NEGATIVE
    if args.witness:
        v = _parse_witness(args.witness)
        if not verify_lvm_witness(c, v):
            _emit({"verdict": "good", "lvm": False, "witness": v, "reason": "invalid witness"}, args.json)
            return NEGATIVE
    else:
        try:
            v = find_lvm_witness(c).v
        except WitnessNotFound as exc:
            status = "not LVM" if exc.conclusive else "inconclusive"
            _emit({"verdict": "good", "lvm": status}, args.json)
            return NEGATIVE
    t = siegel_translate(c, v)
    P = associated_polytope(t)
    report = {
        "verdict": "good",
        "lvm": True,
        "witness": list(v),
        "translated_l": [list(x) for x in t.l],
        "vertex_count": len(P.vertices),
        "vertices": [list(x) for x in P.vertices],
        "duality": duality_check(t),
    }
    _emit(report, args.json)
    return OK


def cmd_fan(args) -> int:
    c = documents.read(args.file, "good_system")
    verdict = is_good_system(c, jobs=args.jobs)
    if verdict is not Verdict.GOOD:
        _emit({"verdict": verdict.value}, args.json)
        return NEGATIVE
    try:
        cert = certify_sphere(c)
    except CertificationFailed as exc:
        _emit({"verdict": "good", "certified": False, "stage": exc.stage, "detail": exc.detail}, args.json)
        return NEGATIVE
    fan = cert.fan
    report = {
        "rank": fan.rank,
        "ray_count": len(fan.rays),
        "rays": [list(r) for r in fan.rays],
        "ray_labels": list(fan.labels),
        "cones": [sorted(fan.labels[i] for i in cone) for cone in fan.maximal_cones if cone],
        "complete": True,
        "sphere": "empty sphere" if cert.dimension < 0 else f"sphere of dim {cert.dimension}",
        "dimension": cert.dimension,
    }
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(documents.dumps(documents.from_fan(fan)))
    _emit(report, args.json)
    return OK


def cmd_inverse(args) -> int:
    r = documents.read(args.file, "sphere_realization")
    try:
        res = inverse_construct(r)
    except NotStarshaped as exc:
        _emit({"starshaped": False, "error": str(exc)}, args.json)
        return NEGATIVE
    c = res.system
    for _ in range(args.augment):
        c = augment_circles(c, check=False)
    ok = round_trip_check(r)
    verdict = is_good_system(c, jobs=args.jobs)
    report = {
        "starshaped": True,
        "type": c.E.type,
        "round_trip": ok,
        "verdict": verdict.value,
        "augmented": args.augment,
    }
    doc = documents.from_good_system(c, labels={str(k): v for k, v in res.label_map.items()})
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(documents.dumps(doc))
        _emit(report, args.json)
    else:
        _emit(report, args.json, stream=sys.stderr)
        sys.stdout.write(documents.dumps(doc))
    return OK if ok and verdict is Verdict.GOOD else NEGATIVE


def cmd_moment_angle(args) -> int:
    doc = documents.load(args.file)
    E = documents.to_fundamental_set(doc)
    K = associated_complex(E)
    cfg = SamplingConfig(samples=args.samples, seed=args.seed)
    points = list(sample_points(E.n, cfg)) + list(sample_complex_points(K, cfg))
    disagree = sum(in_moment_angle(K, z) != in_M1hat(E, z) for z in points)
    report = {"samples": len(points), "identity_disagreements": disagree}
    status = disagree == 0
    if E.n in indispensable_elements(E):
        inside = [z for z in points if in_moment_angle(K, z)]
        pairs = 0
        failures = 0
        for i, z in enumerate(inside):
            u = circle_point(Fraction(i % 7, 3))
            for w in (scale_point(u, z), inside[(i * 7 + 3) % len(inside)]):
                pairs += 1
                failures += not quotient_map_check(E, z, w)
        report["quotient_pairs"] = pairs
        report["quotient_failures"] = failures
        status = status and failures == 0
    _emit(report, args.json)
    return OK if status else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lvmb", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for pairwise checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="good-system verdict")
    p.add_argument("--kernel", action="store_true", help="also print the kernel order")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("complex", parents=[common], help="associated complex")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("polytope", parents=[common], help="LVM witness and associated polytope")
    p.add_argument("--witness", help="comma-separated rational coordinates, e.g. 1/4,1/4")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("fan", parents=[common], help="projected fan and sphere certificate")
    p.add_argument("--out", help="write the fan document here")
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("inverse", parents=[common], help="good system from a starshaped sphere")
    p.add_argument("--augment", type=int, default=0, help="append N pairs of circle indices")
    p.add_argument("--out", help="write the good_system document here (default: stdout)")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("moment-angle", parents=[common], help="sampled moment-angle identities")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_moment_angle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except LVMBError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
