"""Versioned JSON documents for matrices, spaces, pairs, triples, labels, results and affine elements.

Scalars are strings in the exact scalar grammar; matrices are row-major arrays of them.
"""

from __future__ import annotations

import json

from .affine import AffineElement
from .distinguished import ClassificationResult, Triple
from .labels import format_classification, format_types, parse_any
from .linalg import Matrix, Subspace
from .scalars import format_gaussian, format_quaternion, parse_gaussian, parse_quaternion
from .structures import AntiLinearMap, Form, StructuredSpace, family_info
from .typedecomp import Pair

FORMAT = "orbitforge"
VERSION = "1"
KINDS = ("matrix", "quaternion_matrix", "space", "pair", "triple", "label", "result", "affine_element")


class DocumentError(ValueError):
    pass


# scalars and matrices ------------------------------------------------------------------------

def vector_to_json(v) -> list:
    return [format_gaussian(x) for x in v]


def vector_from_json(data) -> tuple:
    if not isinstance(data, list):
        raise DocumentError("vector must be a list of scalar strings")
    try:
        return tuple(parse_gaussian(str(x)) for x in data)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def matrix_to_json(M: Matrix) -> list:
    return [vector_to_json(r) for r in M.rows]


def matrix_from_json(data) -> Matrix:
    if not isinstance(data, list) or not data:
        raise DocumentError("matrix must be a nonempty list of rows")
    rows = [vector_from_json(r) for r in data]
    if len({len(r) for r in rows}) != 1:
        raise DocumentError("matrix rows have different lengths")
    return Matrix(rows)


def qmatrix_to_json(Q) -> list:
    return [[format_quaternion(x) for x in row] for row in Q]


def qmatrix_from_json(data) -> tuple:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise DocumentError("quaternion matrix must be a nonempty list of rows")
    try:
        rows = tuple(tuple(parse_quaternion(str(x)) for x in r) for r in data)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    if len({len(r) for r in rows}) != 1:
        raise DocumentError("matrix rows have different lengths")
    return rows


# structures ---------------------------------------------------------------------------------

def space_to_json(s: StructuredSpace) -> dict:
    return {
        "family": s.family,
        "dim": s.dim,
        "form": None if s.form is None else {"kind": s.form.kind, "matrix": matrix_to_json(s.form.matrix)},
        "sigma": None if s.sigma is None else {"sign": s.sigma.sign, "matrix": matrix_to_json(s.sigma.matrix)},
    }


def space_from_json(d) -> StructuredSpace:
    _need(d, ("family", "dim"))
    family = family_info(d["family"]).name
    form = d.get("form")
    sigma = d.get("sigma")
    f = Form(matrix_from_json(form["matrix"]), form["kind"]) if form else None
    s = AntiLinearMap(matrix_from_json(sigma["matrix"]), int(sigma["sign"])) if sigma else None
    return StructuredSpace(int(d["dim"]), family, f, s)


def pair_to_json(p: Pair) -> dict:
    return {
        "space": space_to_json(p.space),
        "Y": matrix_to_json(p.Y),
        "carrier": None if p.carrier is None else [vector_to_json(v) for v in p.carrier.basis],
    }


def pair_from_json(d) -> Pair:
    _need(d, ("space", "Y"))
    space = space_from_json(d["space"])
    carrier = d.get("carrier")
    C = None
    if carrier:
        C = Subspace(space.dim, [vector_from_json(v) for v in carrier])
    return Pair(space, matrix_from_json(d["Y"]), C)


def triple_to_json(t: Triple) -> dict:
    return {"pair": pair_to_json(t.pair), "v0": vector_to_json(t.v0)}


def triple_from_json(d) -> Triple:
    _need(d, ("pair", "v0"))
    return Triple(pair_from_json(d["pair"]), vector_from_json(d["v0"]))


def result_to_json(r: ClassificationResult) -> dict:
    u = r.unclassified_residual
    unc = None
    if u is not None:
        unc = {
            "dim": u.dim,
            "jordan": None if u.jordan is None else [[format_gaussian(lam), list(sizes)] for lam, sizes in u.jordan],
            "charpoly": None if u.charpoly is None else vector_to_json(u.charpoly),
        }
    return {
        "classification": format_classification(r.core, r.residual_types),
        "core": str(r.core),
        "residual": format_types(r.residual_types),
        "unclassified_residual": unc,
        "witness": matrix_to_json(r.witness),
        "parameter_set": {
            "representative": format_gaussian(r.parameter_set.representative),
            "closure": r.parameter_set.closure,
            "witness": vector_to_json(r.parameter_set.witness),
        },
        "sector": None if r.sector is None else format_gaussian(_as_g(r.sector)),
    }


def _as_g(x):
    return parse_gaussian(str(x)) if not hasattr(x, "re") else x


def result_summary_from_json(d) -> dict:
    """Parsed labels and data of a result document (results are not rebuilt into objects)."""
    _need(d, ("classification", "witness"))
    kind, (core, residual) = parse_any(d["classification"])
    return {
        "core": core,
        "residual": residual,
        "witness": matrix_from_json(d["witness"]),
        "unclassified_residual": d.get("unclassified_residual"),
        "parameter_set": d.get("parameter_set"),
        "sector": d.get("sector"),
    }


def affine_to_json(a: AffineElement, family: str | None = None, n: int | None = None, p: int | None = None) -> dict:
    out = {"linear": matrix_to_json(a.linear), "translation": vector_to_json(a.translation)}
    if family is not None:
        out.update({"family": family, "n": n, "p": p})
    return out


def affine_from_json(d) -> AffineElement:
    _need(d, ("linear", "translation"))
    return AffineElement(matrix_from_json(d["linear"]), vector_from_json(d["translation"]))


# documents ------------------------------------------------------------------------------------

_ENCODERS = {
    "matrix": matrix_to_json,
    "quaternion_matrix": qmatrix_to_json,
    "space": space_to_json,
    "pair": pair_to_json,
    "triple": triple_to_json,
    "label": lambda text: {"text": str(text)},
    "result": result_to_json,
    "affine_element": affine_to_json,
}

_DECODERS = {
    "matrix": matrix_from_json,
    "quaternion_matrix": qmatrix_from_json,
    "space": space_from_json,
    "pair": pair_from_json,
    "triple": triple_from_json,
    "label": lambda d: d["text"],
    "result": result_summary_from_json,
    "affine_element": affine_from_json,
}


def _need(d, keys):
    if not isinstance(d, dict):
        raise DocumentError("expected an object")
    for k in keys:
        if k not in d:
            raise DocumentError(f"missing field {k!r}")


def render(kind: str, obj, **extra) -> str:
    if kind not in KINDS:
        raise DocumentError(f"unknown payload kind {kind!r}")
    payload = _ENCODERS[kind](obj, **extra) if extra else _ENCODERS[kind](obj)
    doc = {"format": FORMAT, "version": VERSION, "kind": kind, "payload": payload}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def load_document(text: str):
    """(kind, payload dict) after checking the envelope."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a JSON document: {exc}") from exc
    _need(doc, ("format", "version", "kind", "payload"))
    if doc["format"] != FORMAT:
        raise DocumentError(f"unknown format {doc['format']!r}")
    if doc["version"] != VERSION:
        raise DocumentError(f"unsupported version {doc['version']!r}")
    if doc["kind"] not in KINDS:
        raise DocumentError(f"unknown payload kind {doc['kind']!r}")
    return doc["kind"], doc["payload"]


def parse(text: str, expect: str | None = None):
    """(kind, object) decoded from a document."""
    kind, payload = load_document(text)
    if expect is not None and kind != expect:
        raise DocumentError(f"expected a {expect} document, got {kind}")
    try:
        return kind, _DECODERS[kind](payload)
    except (KeyError, TypeError, AttributeError) as exc:
        raise DocumentError(f"malformed {kind} payload: {exc}") from exc
