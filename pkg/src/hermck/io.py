"""JSON documents for polynomials and CK initial data.

Indices are 1-based in documents and 0-based in memory; conversion happens
only here.  Rationals travel as ``"p/q"`` strings so no generic JSON parser
ever sees a float.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import GaussianRational, blade_indices
from .ck import CkData
from .poly import SpinorPoly

__all__ = [
    "SCHEMA_VERSION",
    "DocumentError",
    "format_rational",
    "parse_rational",
    "poly_to_doc",
    "poly_from_doc",
    "ckdata_to_doc",
    "ckdata_from_doc",
    "dumps",
    "loads",
]

SCHEMA_VERSION = 1

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class DocumentError(ValueError):
    """Malformed or schema-violating document."""


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise DocumentError(f"not a rational string: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise DocumentError(f"zero denominator in {text!r}") from None


def poly_to_doc(p: SpinorPoly) -> dict:
    terms = []
    for (alpha, beta, mask), c in p.items():
        terms.append(
            {
                "alpha": list(alpha),
                "beta": list(beta),
                "blade": [k + 1 for k in blade_indices(mask)],
                "re": format_rational(c.re),
                "im": format_rational(c.im),
            }
        )
    return {"schema_version": SCHEMA_VERSION, "n": p.n, "terms": terms}


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer")
    return value


def _check_version(doc: dict) -> None:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc.get('schema_version')!r}")


def poly_from_doc(doc: dict, n: int | None = None) -> SpinorPoly:
    _check_version(doc)
    dn = _int(doc.get("n"), "n")
    if dn < 1:
        raise DocumentError("n must be positive")
    if n is not None and dn != n:
        raise DocumentError(f"polynomial has n={dn}, expected {n}")
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise DocumentError("terms must be a list")
    items = []
    for t in terms:
        if not isinstance(t, dict):
            raise DocumentError("each term must be an object")
        try:
            alpha = [_int(e, "exponent") for e in t["alpha"]]
            beta = [_int(e, "exponent") for e in t["beta"]]
            idx = [_int(k, "blade index") for k in t["blade"]]
            coeff = GaussianRational(parse_rational(t["re"]), parse_rational(t["im"]))
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed term {t!r}") from exc
        if len(alpha) != dn or len(beta) != dn:
            raise DocumentError(f"exponent vectors must have length {dn}")
        if any(e < 0 for e in alpha + beta):
            raise DocumentError("negative exponent")
        if any(k < 1 or k > dn for k in idx):
            raise DocumentError(f"blade index outside 1..{dn}")
        if any(x >= y for x, y in zip(idx, idx[1:])):
            raise DocumentError("blade indices must be strictly increasing")
        items.append(((alpha, beta, tuple(k - 1 for k in idx)), coeff))
    return SpinorPoly(dn, items)


def ckdata_to_doc(d: CkData) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "ck_data",
        "n": d.n,
        "r": d.r,
        "a": d.a,
        "b": d.b,
        "top_row_0": [poly_to_doc(p) for p in d.top_row_0],
        "right_col_1": [poly_to_doc(p) for p in d.right_col_1],
    }


def ckdata_from_doc(doc: dict) -> CkData:
    _check_version(doc)
    if doc.get("kind") != "ck_data":
        raise DocumentError("expected a document of kind 'ck_data'")
    try:
        n, r, a, b = (_int(doc[k], k) for k in ("n", "r", "a", "b"))
        top = [poly_from_doc(p, n) for p in doc["top_row_0"]]
        right = [poly_from_doc(p, n) for p in doc["right_col_1"]]
    except KeyError as exc:
        raise DocumentError(f"missing field {exc}") from None
    except TypeError as exc:
        raise DocumentError(str(exc)) from None
    try:
        return CkData(n, r, a, b, tuple(top), tuple(right))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
