"""Exact JSON encoding.

Rationals travel as strings (``"3"``, ``"-5/8"``), the tropical zero as
``"inf"``, Puiseux polynomials as lists of ``{"c": ..., "e": ...}`` terms.
No floats ever appear on the wire.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .extrat import INF, ext, fmt
from .puiseux import PuiseuxPoly


class SchemaError(ValueError):
    """A document parsed as JSON but does not match the expected shape."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def encode_rat(x) -> str:
    return fmt(x)


def decode_rat(s: Any, path: str = "$"):
    if not isinstance(s, str):
        raise SchemaError(path, f"expected a rational string, got {type(s).__name__}")
    try:
        return ext(s)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(path, str(exc)) from None


def encode_vector(v) -> list[str]:
    return [fmt(x) for x in v]


def decode_vector(obj: Any, path: str = "$") -> tuple:
    if not isinstance(obj, list):
        raise SchemaError(path, "expected an array")
    return tuple(decode_rat(x, f"{path}[{i}]") for i, x in enumerate(obj))


def decode_matrix(obj: Any, path: str = "$") -> list[tuple]:
    if not isinstance(obj, list):
        raise SchemaError(path, "expected an array of arrays")
    return [decode_vector(r, f"{path}[{i}]") for i, r in enumerate(obj)]


def encode_poly(p: PuiseuxPoly) -> list[dict]:
    return [{"c": str(c), "e": str(e)} for e, c in p.terms]


def decode_poly(obj: Any, path: str = "$") -> PuiseuxPoly:
    if not isinstance(obj, list):
        raise SchemaError(path, "expected an array of terms")
    acc = {}
    for i, term in enumerate(obj):
        where = f"{path}[{i}]"
        if not isinstance(term, dict) or set(term) != {"c", "e"}:
            raise SchemaError(where, 'term must be an object with keys "c" and "e"')
        c, e = decode_rat(term["c"], where + ".c"), decode_rat(term["e"], where + ".e")
        if c is INF or e is INF:
            raise SchemaError(where, "coefficients and exponents must be finite")
        acc[e] = acc.get(e, Fraction(0)) + c
    return PuiseuxPoly(acc)


def encode_pvector(v) -> list[list[dict]]:
    return [encode_poly(p) for p in v]


def decode_pvector(obj: Any, path: str = "$") -> tuple:
    if not isinstance(obj, list):
        raise SchemaError(path, "expected an array of polynomials")
    return tuple(decode_poly(p, f"{path}[{i}]") for i, p in enumerate(obj))


def decode_pmatrix(obj: Any, path: str = "$") -> list[tuple]:
    if not isinstance(obj, list):
        raise SchemaError(path, "expected an array of polynomial vectors")
    return [decode_pvector(r, f"{path}[{i}]") for i, r in enumerate(obj)]


def dumps(doc: Any) -> str:
    """Canonical text: sorted keys, compact separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def loads(text: str) -> Any:
    """Parse JSON; raises :class:`json.JSONDecodeError` with line and column."""
    return json.loads(text)
