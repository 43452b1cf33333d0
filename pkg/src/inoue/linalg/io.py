"""Text and JSON formats for matrices and polynomials.

Matrix text format: first line ``dim``, then ``dim`` lines of ``dim``
space-separated integers.  Polynomial text format: one line of integers,
lowest degree first.  Both may instead be given as JSON arrays
(``[[...], ...]`` for a matrix, ``[...]`` for a polynomial).
Blank lines and ``#`` comments are ignored in the text formats.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import InputFormatError
from .matrix import IntMatrix
from .poly import IntPoly


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col) + 1
        try:
            out.append(int(tok))
        except ValueError:
            raise InputFormatError(f"expected an integer, got {tok!r}", lineno, col) from None
        col += len(tok) - 1
    return out


def _json_int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputFormatError(f"{where}: expected an integer, got {x!r}")
    return x


def parse_matrix(text: str) -> IntMatrix:
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
        if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
            raise InputFormatError("JSON matrix must be a non-empty array of arrays")
        rows = [[_json_int(x, f"row {i}") for x in r] for i, r in enumerate(data)]
        for i, r in enumerate(rows):
            if len(r) != len(rows):
                raise InputFormatError(f"row {i} has {len(r)} entries, expected {len(rows)}")
        return IntMatrix.from_rows(rows)

    lines = list(_content_lines(text))
    if not lines:
        raise InputFormatError("empty matrix file")
    lineno, first = lines[0]
    head = _ints(first, lineno)
    if len(head) != 1 or head[0] < 1:
        raise InputFormatError("first line must hold a single positive dimension", lineno, 1)
    n = head[0]
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else lineno)
        raise InputFormatError(f"expected {n} matrix rows, found {len(body)}", where)
    rows = []
    for ln, line in body:
        r = _ints(line, ln)
        if len(r) != n:
            raise InputFormatError(f"expected {n} entries, found {len(r)}", ln)
        rows.append(r)
    return IntMatrix.from_rows(rows)


def parse_poly(text: str) -> IntPoly:
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
        if not isinstance(data, list) or not data:
            raise InputFormatError("JSON polynomial must be a non-empty array of integers")
        return IntPoly(tuple(_json_int(x, "coefficient") for x in data))
    lines = list(_content_lines(text))
    if len(lines) != 1:
        where = lines[1][0] if len(lines) > 1 else None
        raise InputFormatError("polynomial file must contain exactly one line of coefficients", where)
    ln, line = lines[0]
    return IntPoly(tuple(_ints(line, ln)))


def read_matrix(path) -> IntMatrix:
    try:
        return parse_matrix(Path(path).read_text())
    except InputFormatError as e:
        raise InputFormatError(f"{path}: {e}") from None


def read_poly(path) -> IntPoly:
    try:
        return parse_poly(Path(path).read_text())
    except InputFormatError as e:
        raise InputFormatError(f"{path}: {e}") from None


def format_matrix(M: IntMatrix) -> str:
    return f"{M.dim}\n" + "\n".join(" ".join(str(x) for x in r) for r in M.rows) + "\n"


def format_poly(p: IntPoly) -> str:
    return " ".join(str(c) for c in (p.coeffs or (0,))) + "\n"
