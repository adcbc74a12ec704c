"""JSON interchange for algebras.

Document layout::

    {"dim": 3, "basis": ["e1", "e2", "e3"],
     "products": [{"left": 1, "right": 1, "result": [{"index": 2, "coeff": "1/1"}]}, ...],
     "metadata": {...}}

Indices are 1-based and coefficients are exact ``"num/den"`` strings.
"""
from __future__ import annotations

import json
import warnings
from fractions import Fraction

from .algebra import Algebra, make_algebra
from .errors import AlgebraError
from .exact_linalg import format_scalar

_TOP_FIELDS = {"dim", "basis", "products", "metadata"}
_PRODUCT_FIELDS = {"left", "right", "result"}
_TERM_FIELDS = {"index", "coeff"}


class SchemaError(AlgebraError):
    pass


def algebra_to_document(A: Algebra, metadata: dict | None = None) -> dict:
    return {
        "dim": A.dim,
        "basis": list(A.labels),
        "products": [
            {"left": i, "right": j,
             "result": [{"index": k, "coeff": format_scalar(c)} for k, c in terms]}
            for (i, j), terms in sorted(A.products.items())
        ],
        "metadata": dict(metadata or {}),
    }


def emit_algebra(A: Algebra, metadata: dict | None = None) -> str:
    return json.dumps(algebra_to_document(A, metadata), indent=2, sort_keys=True) + "\n"


def _warn_unknown(obj: dict, known: set, where: str):
    for key in sorted(set(obj) - known):
        warnings.warn(f"ignoring unknown field {where}.{key}", stacklevel=3)


def _require(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    value = obj[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise SchemaError(f"{where}.{key}: expected an integer, got {value!r}")
    if kind is list and not isinstance(value, list):
        raise SchemaError(f"{where}.{key}: expected a list")
    return value


def _coefficient(text, where) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(f"{where}: coefficient must be a \"num/den\" string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: invalid coefficient {text!r} ({exc})") from None


def document_to_algebra(doc) -> Algebra:
    if not isinstance(doc, dict):
        raise SchemaError("document: expected a JSON object")
    _warn_unknown(doc, _TOP_FIELDS, "document")
    dim = _require(doc, "dim", int, "document")
    basis = doc.get("basis")
    if basis is not None and (not isinstance(basis, list) or not all(isinstance(x, str) for x in basis)):
        raise SchemaError("document.basis: expected a list of strings")
    products = _require(doc, "products", list, "document")
    table = {}
    for n, rec in enumerate(products):
        where = f"products[{n}]"
        if not isinstance(rec, dict):
            raise SchemaError(f"{where}: expected an object")
        _warn_unknown(rec, _PRODUCT_FIELDS, where)
        i = _require(rec, "left", int, where)
        j = _require(rec, "right", int, where)
        result = _require(rec, "result", list, where)
        if (i, j) in table:
            raise SchemaError(f"{where}: duplicate product ({i}, {j})")
        terms = []
        for m, term in enumerate(result):
            tw = f"{where}.result[{m}]"
            if not isinstance(term, dict):
                raise SchemaError(f"{tw}: expected an object")
            _warn_unknown(term, _TERM_FIELDS, tw)
            k = _require(term, "index", int, tw)
            terms.append((k, _coefficient(_require(term, "coeff", None, tw), tw)))
        table[(i, j)] = terms
    try:
        return make_algebra(dim, table, basis)
    except AlgebraError as exc:
        raise SchemaError(f"document: {exc}") from None


def parse_algebra(text: str) -> Algebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return document_to_algebra(doc)


def load_algebra(path) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())
