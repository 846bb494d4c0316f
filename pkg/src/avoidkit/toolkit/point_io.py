"""
Point files: a header line `d n`, then n rows of d coordinates written as integers
or `p/q`. Blank lines and anything after `#` are ignored.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from prettyfmt import fmt_path
from strif import atomic_output_file

from avoidkit.errors import DegenerateInput, ParseError
from avoidkit.geometry.geom_types import PointSeq


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(token: str, line_no: int) -> Fraction:
    num, slash, den = token.partition("/")
    try:
        if slash:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {token!r}", line_no) from None


def format_points(P: PointSeq) -> str:
    lines = [f"{P.dim} {len(P)}"]
    lines.extend(" ".join(format_rational(c) for c in p) for p in P)
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> PointSeq:
    header: tuple[int, int] | None = None
    rows: list[tuple[Fraction, ...]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if header is None:
            if len(tokens) != 2:
                raise ParseError("header must be `d n`", line_no)
            try:
                d, n = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"header must be two integers, got {' '.join(tokens)!r}", line_no) from None
            if d < 1 or n < 0:
                raise ParseError(f"bad header values d={d} n={n}", line_no)
            header = (d, n)
            continue
        d, n = header
        if len(tokens) != d:
            raise ParseError(f"row {len(rows) + 1} has {len(tokens)} coordinates, expected {d}", line_no)
        if len(rows) == n:
            raise ParseError(f"more than the {n} rows declared in the header", line_no)
        rows.append(tuple(parse_rational(t, line_no) for t in tokens))

    if header is None:
        raise ParseError("missing `d n` header")
    d, n = header
    if len(rows) != n:
        raise ParseError(f"header declares {n} rows, found {len(rows)}")
    try:
        return PointSeq(d, tuple(rows))
    except DegenerateInput as e:
        raise ParseError(str(e)) from e


def read_points(path: Path) -> PointSeq:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {fmt_path(path)}: {e}") from e
    try:
        return parse_points(text)
    except ParseError as e:
        located = ParseError(f"{fmt_path(path)}: {e}")
        located.line_no = e.line_no
        raise located from e


def write_points(P: PointSeq, path: Path) -> None:
    with atomic_output_file(path, make_parents=True) as tmp:
        Path(tmp).write_text(format_points(P))
