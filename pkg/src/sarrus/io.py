"""File formats: exact matrices (CSV and JSON) and scheme JSON.

Matrix CSV is one row per line, comma-separated integers or rationals written
as "p/q". Matrix JSON is an array of arrays whose entries are integers or
"p/q" strings; floats are rejected rather than silently rounded, since the
whole point of the library is exactness. Scheme JSON is
{"n": int, "strips": [{"columns": [...], "starts": [...]}]}; signs are never
stored, they are recomputed from window parity.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import NonSquare, ParseError
from .matrix import Matrix, Scalar
from .perm import Permutation
from .scheme import Scheme, SchemeStrip


def _parse_exact(token: str, line: int, column: int) -> Scalar:
    text = token.strip()
    if not text:
        raise ParseError(line, column, "empty entry")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(line, column, f"not an exact number: {text!r} ({e})") from None
    if "." in text or "e" in text.lower():
        raise ParseError(line, column, f"float literal {text!r} rejected; use p/q")
    return int(value) if value.denominator == 1 else value


def matrix_from_csv(text: str) -> Matrix:
    rows: list[list[Scalar]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = [
            _parse_exact(tok, lineno, col)
            for col, tok in enumerate(line.split(","), start=1)
        ]
        rows.append(row)
    if not rows:
        raise ParseError(1, 0, "no rows")
    widths = {len(r) for r in rows}
    if widths != {len(rows)}:
        raise NonSquare(f"{len(rows)} rows with widths {sorted(widths)}")
    return Matrix.from_rows(rows)


def matrix_from_json(text: str) -> Matrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.colno, e.msg) from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError(1, 0, "expected an array of arrays")
    rows: list[list[Scalar]] = []
    for i, row in enumerate(data, start=1):
        out: list[Scalar] = []
        for j, x in enumerate(row, start=1):
            if isinstance(x, bool) or isinstance(x, float):
                raise ParseError(i, j, f"entry {x!r} is not exact; use an int or \"p/q\"")
            if isinstance(x, int):
                out.append(x)
            elif isinstance(x, str):
                out.append(_parse_exact(x, i, j))
            else:
                raise ParseError(i, j, f"entry {x!r} is not exact; use an int or \"p/q\"")
        rows.append(out)
    if not rows:
        raise ParseError(1, 0, "no rows")
    widths = {len(r) for r in rows}
    if widths != {len(rows)}:
        raise NonSquare(f"{len(rows)} rows with widths {sorted(widths)}")
    return Matrix.from_rows(rows)


def parse_matrix(path: str | Path, format: str | None = None) -> Matrix:
    """Read an exact matrix from a file; format 'csv' or 'json', inferred from
    the suffix when omitted."""
    path = Path(path)
    fmt = format or ("json" if path.suffix.lower() == ".json" else "csv")
    text = path.read_text(encoding="utf-8")
    if fmt == "csv":
        return matrix_from_csv(text)
    if fmt == "json":
        return matrix_from_json(text)
    raise ValueError(f"unknown matrix format {fmt!r}")


def scheme_to_json(sch: Scheme, *, indent: int | None = 2) -> str:
    payload = {
        "n": sch.n,
        "strips": [
            {"columns": list(s.columns), "starts": list(s.starts)} for s in sch.strips
        ],
    }
    return json.dumps(payload, indent=indent)


def scheme_from_json(text: str) -> Scheme:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.colno, e.msg) from None
    try:
        n = data["n"]
        strips = tuple(
            SchemeStrip(
                n=n,
                columns=tuple(int(c) for c in s["columns"]),
                starts=tuple(int(p) for p in s["starts"]),
            )
            for s in data["strips"]
        )
    except (KeyError, TypeError) as e:
        raise ParseError(1, 0, f"malformed scheme JSON: {e}") from None
    return Scheme(n=n, strips=strips)


def load_scheme(path: str | Path) -> Scheme:
    return scheme_from_json(Path(path).read_text(encoding="utf-8"))


def save_scheme(sch: Scheme, path: str | Path) -> None:
    Path(path).write_text(scheme_to_json(sch) + "\n", encoding="utf-8")


def permutation_to_json(p: Permutation) -> str:
    return json.dumps(list(p.images))


def permutation_from_json(text: str) -> Permutation:
    data = json.loads(text)
    return Permutation(tuple(int(v) for v in data))


def format_scalar(x: Scalar) -> str:
    """Exact rendering: integers plain, rationals as p/q."""
    return str(x)
