"""JSON documents for hyperfield tables, matroids, algebra elements and reports.

Every document carries a ``"schema"`` id.  Serialization is deterministic:
sorted keys, two-space indent, trailing newline.
"""
from __future__ import annotations

import json
from fractions import Fraction

import jsonschema

from hypermatroid import ordinary as om
from hypermatroid.hopf import AlgebraElement, Tensor
from hypermatroid.iso import parse_key
from hypermatroid.hyperfield import (
    BUILTINS,
    Hyperfield,
    HyperfieldError,
    TableHyperfield,
    verify_hyperfield_axioms,
)
from hypermatroid.matroid import CircuitSet, GPFunction, HVector, MatroidError, circuits_from_gpf
from hypermatroid.report import Report

HYPERFIELD_SCHEMA = "hyperfield-table/1"
MATROID_SCHEMA = "matroid/1"
ALGEBRA_SCHEMA = "algebra/1"
REPORT_SCHEMA = "report/1"


class FormatError(ValueError):
    """Schema violation or content error, with a JSON path."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


_symbol = {"type": "string", "minLength": 1, "pattern": "^[^,|]+$"}

_table = {
    "type": "object",
    "additionalProperties": False,
    "required": ["kind", "elements", "zero", "one", "neg", "mul", "add"],
    "properties": {
        "schema": {"const": HYPERFIELD_SCHEMA},
        "kind": {"const": "table"},
        "name": {"type": "string"},
        "elements": {"type": "array", "items": _symbol, "minItems": 2, "uniqueItems": True},
        "zero": _symbol,
        "one": _symbol,
        "neg": {"type": "object", "additionalProperties": _symbol},
        "mul": {"type": "object", "additionalProperties": _symbol},
        "add": {"type": "object", "additionalProperties": {
            "type": "array", "items": _symbol, "minItems": 1, "uniqueItems": True}},
    },
}

_hyperfield_ref = {"oneOf": [{"enum": sorted(BUILTINS)}, _table]}

MATROID = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "hyperfield", "ground"],
    "properties": {
        "schema": {"const": MATROID_SCHEMA},
        "hyperfield": _hyperfield_ref,
        "ground": {"type": "array", "items": {"type": "string", "minLength": 1}, "uniqueItems": True},
        "rank": {"type": "integer", "minimum": 0},
        "gpf": {"type": "array", "items": {
            "type": "object", "additionalProperties": False, "required": ["subset", "value"],
            "properties": {"subset": {"type": "array", "items": {"type": "string"}},
                           "value": {"type": "string"}}}},
        "circuits": {"type": "array", "items": {
            "type": "object", "additionalProperties": False, "required": ["coords"],
            "properties": {"coords": {"type": "object", "additionalProperties": {"type": "string"}}}}},
    },
    "anyOf": [{"required": ["gpf", "rank"]}, {"required": ["circuits"]}],
}

_monomial = {"type": "array", "items": {"type": "string"}}
_coeff = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}

ALGEBRA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "hyperfield", "terms"],
    "properties": {
        "schema": {"const": ALGEBRA_SCHEMA},
        "hyperfield": _hyperfield_ref,
        "terms": {"type": "array", "items": {"oneOf": [
            {"type": "object", "additionalProperties": False, "required": ["monomial", "coeff"],
             "properties": {"monomial": _monomial, "coeff": _coeff}},
            {"type": "object", "additionalProperties": False, "required": ["left", "right", "coeff"],
             "properties": {"left": _monomial, "right": _monomial, "coeff": _coeff}},
        ]}},
    },
}

REPORT = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "check", "result", "checked", "failures", "violations"],
    "properties": {
        "schema": {"const": REPORT_SCHEMA},
        "check": {"type": "string"},
        "result": {"enum": ["pass", "fail"]},
        "checked": {"type": "integer", "minimum": 0},
        "failures": {"type": "integer", "minimum": 0},
        "violations": {"type": "array", "items": {
            "type": "object", "additionalProperties": False, "required": ["rule", "witness", "detail"],
            "properties": {"rule": {"type": "string"}, "witness": {"type": "array"},
                           "detail": {"type": "string"}}}},
        "witness": {"type": "object", "additionalProperties": False, "required": ["bijection", "alpha"],
                    "properties": {"bijection": {"type": "object", "additionalProperties": {"type": "string"}},
                                   "alpha": {"type": "string"}}},
    },
}

HYPERFIELD_DOC = dict(_table, required=["schema"] + _table["required"])


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None


def _validate(doc, schema):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = "$" + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]" for p in err.absolute_path)
        raise FormatError(err.message, path)


# ---------------------------------------------------------------------------
# hyperfields
# ---------------------------------------------------------------------------

def _pair(key: str, path: str) -> tuple:
    parts = key.split(",")
    if len(parts) != 2:
        raise FormatError(f"pair key {key!r} must be two comma-separated symbols", path)
    return parts[0], parts[1]


def hyperfield_from_doc(doc, path: str = "$", verify: bool = True) -> Hyperfield:
    if isinstance(doc, str):
        try:
            return BUILTINS[doc]
        except KeyError:
            raise FormatError(f"unknown hyperfield {doc!r}", path) from None
    if doc.get("name") in BUILTINS:
        raise FormatError(f"table name {doc['name']!r} is reserved for a built-in", f"{path}['name']")
    els = doc["elements"]
    known = set(els)
    for k, v in [("zero", doc["zero"]), ("one", doc["one"])]:
        if v not in known:
            raise FormatError(f"{v!r} is not an element", f"{path}['{k}']")
    mul, add = {}, {}
    for key, v in doc["mul"].items():
        a, b = _pair(key, f"{path}['mul']")
        mul[(a, b)] = v
    for key, v in doc["add"].items():
        a, b = _pair(key, f"{path}['add']")
        add[frozenset((a, b))] = frozenset(v)
    try:
        h = TableHyperfield(els, doc["zero"], doc["one"], doc["neg"], mul, add, name=doc.get("name"))
    except HyperfieldError as exc:
        raise FormatError(str(exc), path) from None
    if verify:
        rep = verify_hyperfield_axioms(h)
        if not rep.passed:
            v = rep.violations[0]
            raise FormatError(f"table violates the hyperfield axioms ({v.rule} at {v.witness})", path)
    return h


def hyperfield_to_doc(h: Hyperfield):
    if isinstance(h, TableHyperfield) and h.name not in BUILTINS:
        doc = h.table_dict()
        if h.given_name is not None:
            doc["name"] = h.given_name
        return doc
    return h.name


def parse_hyperfield(text: str, verify: bool = True) -> Hyperfield:
    """A hyperfield document; a bare JSON string names a built-in."""
    doc = _load(text)
    if isinstance(doc, str):
        return hyperfield_from_doc(doc)
    _validate(doc, HYPERFIELD_DOC)
    return hyperfield_from_doc(doc, verify=verify)


def serialize_hyperfield(h: Hyperfield) -> str:
    doc = hyperfield_to_doc(h)
    if isinstance(doc, dict):
        doc = dict(doc, schema=HYPERFIELD_SCHEMA)
    return dumps(doc)


# ---------------------------------------------------------------------------
# matroids
# ---------------------------------------------------------------------------

def _element(h: Hyperfield, text: str, path: str):
    try:
        return h.parse(text)
    except HyperfieldError as exc:
        raise FormatError(str(exc), path) from None


def matroid_from_doc(doc):
    _validate(doc, MATROID)
    h = hyperfield_from_doc(doc["hyperfield"], "$['hyperfield']")
    ground = tuple(doc["ground"])
    index = {x: i for i, x in enumerate(ground)}
    phi = None
    if "gpf" in doc:
        r = doc["rank"]
        if r > len(ground):
            raise FormatError(f"rank {r} exceeds the ground set size {len(ground)}", "$['rank']")
        values = {}
        for i, entry in enumerate(doc["gpf"]):
            path = f"$['gpf'][{i}]"
            sub = entry["subset"]
            if len(sub) != r or len(set(sub)) != r:
                raise FormatError(f"subset {sub} is not an {r}-subset", path)
            missing = [x for x in sub if x not in index]
            if missing:
                raise FormatError(f"labels {missing} are not in the ground set", path)
            m = om.mask_of(index[x] for x in sub)
            if m in values:
                raise FormatError(f"subset {sorted(sub)} listed twice", path)
            try:
                values[m] = _element(h, entry["value"], path + "['value']")
            except FormatError:
                raise FormatError(f"value {entry['value']!r} for subset {sub} is not an element of {h.name}",
                                  path) from None
        try:
            phi = GPFunction(h, ground, r, values)
        except (MatroidError, HyperfieldError) as exc:
            raise FormatError(str(exc), "$['gpf']") from None
    circuits = None
    if "circuits" in doc:
        vecs = []
        for i, entry in enumerate(doc["circuits"]):
            path = f"$['circuits'][{i}]"
            coords = {}
            for label, text in entry["coords"].items():
                if label not in index:
                    raise FormatError(f"label {label!r} is not in the ground set", path)
                coords[label] = _element(h, text, f"{path}['coords'][{label!r}]")
            v = HVector.from_map(h, ground, coords)
            if not v.support:
                raise FormatError("zero vector listed as a circuit", path)
            vecs.append(v)
        circuits = CircuitSet.build(h, ground, vecs)
    if phi is not None:
        if circuits is not None and circuits != circuits_from_gpf(phi):
            raise FormatError("listed circuits disagree with the Grassmann-Plücker function", "$['circuits']")
        return phi
    return circuits


def parse_matroid(text: str):
    """A :class:`GPFunction` when the document has ``"gpf"``, else a
    :class:`CircuitSet`.  Listed circuits next to a GPF are checked against it."""
    return matroid_from_doc(_load(text))


def matroid_to_doc(m, with_circuits: bool = False) -> dict:
    h = m.hyperfield
    doc = {"schema": MATROID_SCHEMA, "hyperfield": hyperfield_to_doc(h), "ground": list(m.ground)}
    if isinstance(m, GPFunction):
        doc["rank"] = m.rank
        doc["gpf"] = [{"subset": list(m.labels(b)), "value": h.format(v)}
                      for b, v in sorted(m.values.items(), key=lambda kv: om.bits(kv[0]))]
        circuits = circuits_from_gpf(m) if with_circuits else None
    else:
        circuits = m
    if circuits is not None:
        doc["circuits"] = [{"coords": {x: h.format(v) for x, v in c.as_map().items()}}
                           for c in circuits.sorted()]
    return doc


def serialize_matroid(m, with_circuits: bool = False) -> str:
    return dumps(matroid_to_doc(m, with_circuits))


# ---------------------------------------------------------------------------
# algebra elements
# ---------------------------------------------------------------------------

def algebra_to_doc(x, h: Hyperfield) -> dict:
    if isinstance(x, Tensor):
        terms = [{"left": list(k[0]), "right": list(k[1]), "coeff": str(v)} for k, v in x.terms.items()]
    else:
        terms = [{"monomial": list(k), "coeff": str(v)} for k, v in x.terms.items()]
    return {"schema": ALGEBRA_SCHEMA, "hyperfield": hyperfield_to_doc(h), "terms": terms}


def serialize_algebra(x, h: Hyperfield) -> str:
    return dumps(algebra_to_doc(x, h))


def parse_algebra(text: str):
    """``(element, hyperfield)``; the element is a :class:`Tensor` when the
    terms carry ``left``/``right``."""
    doc = _load(text)
    _validate(doc, ALGEBRA)
    h = hyperfield_from_doc(doc["hyperfield"], "$['hyperfield']")
    terms = doc["terms"]
    for i, t in enumerate(terms):
        for side in ("monomial", "left", "right"):
            for key in t.get(side, []):
                try:
                    name = parse_key(key)[0]
                except MatroidError as exc:
                    raise FormatError(str(exc), f"$['terms'][{i}]['{side}']") from None
                if name != h.name:
                    raise FormatError(f"class key {key!r} is not over {h.name}", f"$['terms'][{i}]['{side}']")
    kinds = {"monomial" in t for t in terms}
    if len(kinds) > 1:
        raise FormatError("algebra and tensor terms are mixed", "$['terms']")
    if terms and "left" in terms[0]:
        out = {}
        for t in terms:
            key = (tuple(sorted(t["left"])), tuple(sorted(t["right"])))
            out[key] = out.get(key, 0) + Fraction(t["coeff"])
        return Tensor(out), h
    out = {}
    for t in terms:
        key = tuple(sorted(t["monomial"]))
        out[key] = out.get(key, 0) + Fraction(t["coeff"])
    return AlgebraElement(out), h


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def serialize_report(rep: Report) -> str:
    return dumps(rep.to_dict())


def parse_report(text: str) -> dict:
    doc = _load(text)
    _validate(doc, REPORT)
    return doc
