"""Plain-text matrix files.

First significant line is a field header, ``field q`` or ``field gf <p>``;
every later significant line is one whitespace-separated matrix row. Lines
starting with ``#`` are comments; blank lines are skipped. Scalars follow
the shared token grammar (integers everywhere, ``a/b`` over q only).
"""

from __future__ import annotations

from .errors import DomainError, ParseError, UsageError
from .fields import RATIONALS, FieldSpec, gf, parse_scalar
from .matrix import Matrix
from .subspace import Vector


def field_header(field: FieldSpec) -> str:
    return "field q" if not field.is_prime_field else f"field gf {field.modulus}"


def parse_field_tokens(tokens) -> FieldSpec:
    tokens = list(tokens)
    if tokens == ["q"]:
        return RATIONALS
    if len(tokens) == 2 and tokens[0] == "gf":
        if not tokens[1].isdigit():
            raise ParseError(f"bad modulus {tokens[1]!r}")
        try:
            return gf(int(tokens[1]))
        except DomainError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field {' '.join(tokens)!r} (use 'q' or 'gf <p>')")


def parse_matrix_text(text: str) -> Matrix:
    field = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if field is None:
            if tokens[0] != "field":
                raise ParseError(f"line {lineno}: expected a 'field ...' header first")
            field = parse_field_tokens(tokens[1:])
            continue
        try:
            rows.append([parse_scalar(tok, field) for tok in tokens])
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if field is None:
        raise ParseError("missing 'field ...' header")
    if not rows:
        raise ParseError("no matrix rows")
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ParseError("rows have different lengths")
    return Matrix(field, rows)


def load_matrix(path) -> Matrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_matrix_text(text)


def render_matrix(a: Matrix, comments=()) -> str:
    lines = [field_header(a.field)]
    lines.extend(f"# {c}" for c in comments)
    lines.extend(" ".join(str(e) for e in row) for row in a.rows)
    return "\n".join(lines) + "\n"


def parse_vector_text(text: str, field: FieldSpec) -> Vector:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty vector text")
    return Vector(field, tuple(parse_scalar(tok, field) for tok in tokens))
