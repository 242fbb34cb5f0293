"""Exchange formats: JSON documents holding exact fraction strings.

Fractions are serialized as strings, never floats, so certificates are
bit-exact across platforms.  The accepted grammar per entry is
``integer`` or ``integer "/" positive-integer`` with the fraction stored
reduced; anything else is a ParseError.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .decompose import Decomposition
from .errors import ParseError
from .matrix import Matrix

_FRACTION_RE = re.compile(r"-?(?:0|[1-9][0-9]*)(?:/(?:[1-9][0-9]*))?\Z")


def format_fraction(value: Fraction) -> str:
    return str(value)


def parse_fraction(text) -> Fraction:
    if not isinstance(text, str) or not _FRACTION_RE.match(text):
        raise ParseError(f"invalid fraction {text!r}")
    if "/" in text:
        numerator, denominator = text.split("/")
        if math.gcd(abs(int(numerator)), int(denominator)) != 1:
            raise ParseError(f"fraction {text!r} is not reduced")
    return Fraction(text)


def _require_positive_int(obj, field: str) -> int:
    value = obj.get(field)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ParseError(f"field {field!r} must be a positive integer")
    return value


def _parse_grid(entries, m: int, n: int, label: str) -> Matrix:
    if not isinstance(entries, list) or len(entries) != m:
        raise ParseError(f"{label} must be a list of {m} rows")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"every {label} row must be a list of {n} entries")
        rows.append([parse_fraction(value) for value in row])
    return Matrix(rows)


def _grid(matrix: Matrix) -> list[list[str]]:
    return [[format_fraction(value) for value in row] for row in matrix.rows]


def matrix_document(matrix: Matrix, k: int) -> dict:
    return {"m": matrix.m, "n": matrix.n, "k": k, "entries": _grid(matrix)}


def parse_matrix_document(obj) -> tuple[Matrix, int]:
    if not isinstance(obj, dict):
        raise ParseError("matrix document must be a JSON object")
    m = _require_positive_int(obj, "m")
    n = _require_positive_int(obj, "n")
    k = _require_positive_int(obj, "k")
    matrix = _parse_grid(obj.get("entries"), m, n, "entries")
    return matrix, k


def decomposition_document(decomposition: Decomposition, k: int) -> dict:
    return {
        "base": matrix_document(decomposition.base, k),
        "terms": [
            {"weight": format_fraction(weight), "vertex": _grid(vertex)}
            for weight, vertex in decomposition.terms
        ],
    }


def parse_decomposition_document(obj) -> tuple[Decomposition, int]:
    if not isinstance(obj, dict):
        raise ParseError("decomposition document must be a JSON object")
    base, k = parse_matrix_document(obj.get("base"))
    terms_obj = obj.get("terms")
    if not isinstance(terms_obj, list):
        raise ParseError("field 'terms' must be a list")
    terms = []
    for term in terms_obj:
        if not isinstance(term, dict):
            raise ParseError("every term must be a JSON object")
        weight = parse_fraction(term.get("weight"))
        vertex = _parse_grid(term.get("vertex"), base.m, base.n, "vertex")
        terms.append((weight, vertex))
    return Decomposition(base, tuple(terms)), k
