"""JSON documents: fundamental sets, good systems, sphere realizations, fans.

Rationals are written as strings ("3/4") so nothing passes through floats;
index sets are 1-based sorted arrays.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import jsonschema

from .combinatorics import FundamentalSet, validate_fundamental_set
from .errors import LVMBError, ParseError, SchemaError
from .goodsystem import GoodSystemCandidate
from .inverse import SphereRealization
from .toric import Fan

_rational = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[-+]?\d+(\s*/\s*[-+]?\d+)?\s*$"},
    ]
}
_index_set = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_int_vector = {"type": "array", "items": {"type": "integer"}}

SCHEMAS = {
    "fundamental_set": {
        "type": "object",
        "required": ["version", "kind", "n", "subsets"],
        "properties": {
            "version": {"const": 1},
            "kind": {"const": "fundamental_set"},
            "n": {"type": "integer", "minimum": 1},
            "subsets": {"type": "array", "minItems": 1, "items": _index_set},
        },
    },
    "good_system": {
        "type": "object",
        "required": ["version", "kind", "n", "m", "subsets", "l"],
        "properties": {
            "version": {"const": 1},
            "kind": {"const": "good_system"},
            "n": {"type": "integer", "minimum": 1},
            "m": {"type": "integer", "minimum": 0},
            "subsets": {"type": "array", "minItems": 1, "items": _index_set},
            "l": {"type": "array", "items": {"type": "array", "items": _rational}},
        },
    },
    "sphere_realization": {
        "type": "object",
        "required": ["version", "kind", "d", "facets", "vertices"],
        "properties": {
            "version": {"const": 1},
            "kind": {"const": "sphere_realization"},
            "d": {"type": "integer", "minimum": 0},
            "facets": {"type": "array", "minItems": 1, "items": _index_set},
            "vertices": {"type": "array", "items": _int_vector},
        },
    },
    "fan": {
        "type": "object",
        "required": ["version", "kind", "rank", "rays", "cones"],
        "properties": {
            "version": {"const": 1},
            "kind": {"const": "fan"},
            "rank": {"type": "integer", "minimum": 0},
            "rays": {"type": "array", "items": _int_vector},
            "cones": {"type": "array", "items": _index_set},
            "labels": _index_set,
        },
    },
}


def fmt_rat(x: Fraction) -> str:
    return str(x)


def load(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("kind") not in SCHEMAS:
        raise SchemaError(f"unknown or missing document kind; expected one of {sorted(SCHEMAS)}")
    try:
        jsonschema.validate(doc, SCHEMAS[doc["kind"]])
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message) from exc
    return doc


def dumps(doc: dict) -> str:
    """Canonical text: one key per line, one index set or vector per line."""
    lines = []
    for key, value in doc.items():
        if isinstance(value, list) and value and all(isinstance(x, list) for x in value):
            rows = ",\n".join("    " + json.dumps(x) for x in value)
            text = "[\n" + rows + "\n  ]"
        else:
            text = json.dumps(value)
        lines.append(f"  {json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def to_fundamental_set(doc: dict) -> FundamentalSet:
    if doc["kind"] == "good_system":
        return to_good_system(doc).E
    if doc["kind"] != "fundamental_set":
        raise SchemaError(f"expected a fundamental_set, got {doc['kind']}")
    return validate_fundamental_set(doc["subsets"], doc["n"])


def to_good_system(doc: dict) -> GoodSystemCandidate:
    if doc["kind"] != "good_system":
        raise SchemaError(f"expected a good_system, got {doc['kind']}")
    try:
        c = GoodSystemCandidate.build(doc["subsets"], doc["n"], doc["l"])
    except ZeroDivisionError as exc:
        raise SchemaError("zero denominator") from exc
    if c.m != doc["m"]:
        raise SchemaError(f"m = {doc['m']} disagrees with subset size {c.E.M}")
    return c


def to_sphere(doc: dict) -> SphereRealization:
    if doc["kind"] != "sphere_realization":
        raise SchemaError(f"expected a sphere_realization, got {doc['kind']}")
    r = SphereRealization.build(doc["facets"], doc["vertices"])
    if r.d != doc["d"]:
        raise SchemaError(f"facets have dimension {r.d}, document says {doc['d']}")
    return r


def to_fan(doc: dict) -> Fan:
    if doc["kind"] != "fan":
        raise SchemaError(f"expected a fan, got {doc['kind']}")
    rays = tuple(tuple(r) for r in doc["rays"])
    cones = tuple(tuple(sorted(i - 1 for i in c)) for c in doc["cones"]) or ((),)
    labels = tuple(doc["labels"]) if "labels" in doc else None
    try:
        return Fan(doc["rank"], rays, cones, labels=labels)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def from_fundamental_set(E: FundamentalSet) -> dict:
    return {"version": 1, "kind": "fundamental_set", "n": E.n, "subsets": [list(s) for s in E.subsets]}


def from_good_system(c: GoodSystemCandidate, **extra) -> dict:
    doc = {
        "version": 1,
        "kind": "good_system",
        "n": c.n,
        "m": c.m,
        "subsets": [list(s) for s in c.E.subsets],
        "l": [[fmt_rat(x) for x in v] for v in c.l],
    }
    doc.update(extra)
    return doc


def from_sphere(r: SphereRealization) -> dict:
    return {
        "version": 1,
        "kind": "sphere_realization",
        "d": r.d,
        "facets": [list(f) for f in r.complex.facets],
        "vertices": [list(x) for x in r.vertices],
    }


def from_fan(f: Fan) -> dict:
    cones = [sorted(i + 1 for i in c) for c in f.maximal_cones if c]
    return {
        "version": 1,
        "kind": "fan",
        "rank": f.rank,
        "rays": [list(r) for r in f.rays],
        "cones": cones,
        "labels": list(f.labels),
    }


def read(path, kind: str):
    """Load ``path`` and convert to the object for ``kind``."""
    doc = load(path)
    try:
        return {
            "fundamental_set": to_fundamental_set,
            "good_system": to_good_system,
            "sphere_realization": to_sphere,
            "fan": to_fan,
        }[kind](doc)
    except LVMBError:
        raise
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc)) from exc
