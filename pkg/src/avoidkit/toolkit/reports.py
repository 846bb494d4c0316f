"""
Line-oriented `key=value` reports. The first line is always `kind=<kind>`. Index
sets are comma-separated, lists of index sets are `|`-separated, and simplices are
`-`-joined vertex indices separated by `;`.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from strif import atomic_output_file

from avoidkit.errors import ParseError


def format_index_set(indices: Iterable[int]) -> str:
    return ",".join(str(i) for i in indices)


def parse_index_set(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"not an index set: {text!r}") from None


def format_index_sets(sets: Iterable[Iterable[int]]) -> str:
    return "|".join(format_index_set(s) for s in sets)


def parse_index_sets(text: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_index_set(s) for s in text.split("|"))


def format_simplices(simplices: Iterable[Iterable[int]]) -> str:
    return ";".join("-".join(str(i) for i in s) for s in simplices)


def parse_simplices(text: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(tuple(int(i) for i in s.split("-")) for s in text.split(";"))
    except ValueError:
        raise ParseError(f"not a simplex list: {text!r}") from None


def format_bool(value: bool) -> str:
    return "true" if value else "false"


@dataclass
class Report:
    kind: str
    fields: dict[str, str] = field(default_factory=dict)

    def add(self, key: str, value: object) -> Report:
        if "=" in key or "\n" in key:
            raise ValueError(f"Bad report key: {key!r}")
        text = format_bool(value) if isinstance(value, bool) else str(value)
        self.fields[key] = text.replace("\n", " ")
        return self

    def get(self, key: str) -> str:
        try:
            return self.fields[key]
        except KeyError:
            raise ParseError(f"report of kind {self.kind} has no `{key}` field") from None

    def to_text(self) -> str:
        lines = [f"kind={self.kind}", *(f"{k}={v}" for k, v in self.fields.items())]
        return "\n".join(lines) + "\n"


def parse_report(text: str) -> Report:
    report: Report | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {line!r}", line_no)
        if report is None:
            if key != "kind":
                raise ParseError("first field must be `kind`", line_no)
            report = Report(value)
        else:
            report.fields[key] = value
    if report is None:
        raise ParseError("empty report")
    return report


def read_report(path: Path) -> Report:
    return parse_report(Path(path).read_text())


def write_report(report: Report, path: Path | None = None) -> None:
    """Write to `path` atomically, or to stdout."""
    text = report.to_text()
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with atomic_output_file(path, make_parents=True) as tmp:
        Path(tmp).write_text(text)


def sizes(sets: Sequence[Sequence[int]]) -> str:
    return format_index_set(len(s) for s in sets)
