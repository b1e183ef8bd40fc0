"""Bundled reference tables and the scenario reports that check them.

Each file carries one classification table transcribed from the cited
source, with a `title` header naming it.  Rows are stored in the
package's canonical order and grammar.

Scenario semantics differ per table, mirroring how each classification
statement is phrased:

* ``elliptic-4V1-2S`` -- full enumeration over every half split must
  reproduce the row set exactly.
* ``parabolic`` -- the realized half decompositions are classification
  input; within each decomposition appearing in the reference, the
  congruence system must produce exactly the listed separations.
* ``hyperbolic`` -- for each listed half decomposition, exactly one
  separation is admissible and it must match, including pw1.
* ``other`` -- one-directional: every listed row must be admissible with
  matching pw1; realization flags are echoed, never checked.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .enriques import (
    ClassificationRow,
    ergm_satisfiable,
    enumerate_separations,
    parse_row,
    pw1_set,
    render_pw1,
    render_row,
)
from .surface import SurfaceUnion, parse_components

LABELS = ("elliptic-4V1-2S", "parabolic", "hyperbolic", "other")

TABLES_DIR_ENV = "PVFORM_TABLES_DIR"


@dataclass(frozen=True)
class ReferenceTable:
    label: str
    title: str
    cases: tuple[tuple[SurfaceUnion, tuple[ClassificationRow, ...]], ...]

    @property
    def rows(self) -> tuple[ClassificationRow, ...]:
        return tuple(r for _, case_rows in self.cases for r in case_rows)


class MissingReferenceError(FileNotFoundError):
    """Reference data file absent (distinct from a mismatch)."""


def _read_text(label: str) -> str:
    override = os.environ.get(TABLES_DIR_ENV)
    if override:
        path = os.path.join(override, f"{label}.txt")
        if not os.path.exists(path):
            raise MissingReferenceError(path)
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    ref = resources.files("pvform").joinpath("tables", f"{label}.txt")
    if not ref.is_file():
        raise MissingReferenceError(str(ref))
    return ref.read_text(encoding="utf-8")


def load_reference(label: str) -> ReferenceTable:
    if label not in LABELS:
        raise ValueError(f"unknown table label: {label!r}")
    text = _read_text(label)
    title = ""
    cases: list[tuple[SurfaceUnion, list[ClassificationRow]]] = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.rstrip()
        if not line:
            continue
        if line.startswith("table "):
            if line[6:].strip() != label:
                raise ValueError(f"{label}: header names {line[6:].strip()!r}")
        elif line.startswith("title "):
            title = line[6:].strip()
        elif line.startswith("case "):
            cases.append((parse_components(line[5:].strip()), []))
        else:
            if not cases:
                raise ValueError(f"{label}:{ln}: row before any case")
            row = parse_row(line)
            if row.partition.union != cases[-1][0]:
                raise ValueError(f"{label}:{ln}: row does not match its case")
            cases[-1][1].append(row)
    if not title:
        raise ValueError(f"{label}: missing title header")
    return ReferenceTable(
        label, title, tuple((u, tuple(rows)) for u, rows in cases)
    )


@dataclass(frozen=True)
class TableDiff:
    label: str
    matched: int
    expected: int
    missing: tuple[str, ...]
    extra: tuple[str, ...]
    wrong_pw1: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.wrong_pw1)

    def summary(self) -> str:
        status = "match" if self.ok else "MISMATCH"
        return f"{self.label}: {self.matched}/{self.expected} rows {status}"


def _diff(label: str, got: list[ClassificationRow], want: list[ClassificationRow]) -> TableDiff:
    got_by_part = {render_partition_key(r): r for r in got}
    want_by_part = {render_partition_key(r): r for r in want}
    missing = sorted(k for k in want_by_part if k not in got_by_part)
    extra = sorted(k for k in got_by_part if k not in want_by_part)
    wrong = sorted(
        f"{k}: pw1={render_pw1(got_by_part[k].pw1)} expected {render_pw1(want_by_part[k].pw1)}"
        for k in want_by_part
        if k in got_by_part and got_by_part[k].pw1 != want_by_part[k].pw1
    )
    matched = len(want_by_part) - len(missing) - len(wrong)
    return TableDiff(label, matched, len(want_by_part), tuple(missing), tuple(extra), tuple(wrong))


def render_partition_key(row: ClassificationRow) -> str:
    from .enriques import render_partition

    return render_partition(row.partition)


def _half_splits_of(rows) -> list[tuple[SurfaceUnion, SurfaceUnion]]:
    seen = []
    for r in rows:
        halves = r.partition.halves
        if halves not in seen:
            seen.append(halves)
    return seen


def check_elliptic(ref: ReferenceTable) -> TableDiff:
    (u, want), = ref.cases
    got = enumerate_separations(u)
    return _diff(ref.label, got, list(want))


def check_parabolic(ref: ReferenceTable) -> list[TableDiff]:
    out = []
    for u, want in ref.cases:
        got: list[ClassificationRow] = []
        for halves in _half_splits_of(want):
            got += enumerate_separations(u, halves=halves)
        out.append(_diff(f"{ref.label}[{u.token}]", got, list(want)))
    return out


def check_hyperbolic(ref: ReferenceTable) -> list[TableDiff]:
    out = []
    for u, want in ref.cases:
        for row in want:
            got = enumerate_separations(u, halves=row.partition.halves)
            out.append(
                _diff(f"{ref.label}[{render_partition_key(row)}]", got, [row])
            )
    return out


def check_other(ref: ReferenceTable) -> list[TableDiff]:
    out = []
    for _, want in ref.cases:
        for row in want:
            sat = ergm_satisfiable(row.partition) is not None
            got = [ClassificationRow(row.partition, pw1_set(row.partition))] if sat else []
            out.append(_diff(f"{ref.label}[{render_partition_key(row)}]", got, [row]))
    return out


@dataclass(frozen=True)
class TableReport:
    label: str
    rendered: str
    diffs: tuple[TableDiff, ...]

    @property
    def ok(self) -> bool:
        return all(d.ok for d in self.diffs)


def table_report(label: str) -> TableReport:
    """Run one scenario: enumerate, render rows, and diff against the
    bundled reference."""
    ref = load_reference(label)
    if label == "elliptic-4V1-2S":
        diffs = [check_elliptic(ref)]
    elif label == "parabolic":
        diffs = check_parabolic(ref)
    elif label == "hyperbolic":
        diffs = check_hyperbolic(ref)
    else:
        diffs = check_other(ref)
    lines = [f"# {ref.label}: {ref.title}"]
    for u, rows in ref.cases:
        lines.append(f"case {u.token}")
        for row in rows:
            lines.append(render_row(row))
    lines.append("")
    for d in diffs:
        lines.append(d.summary())
        for k in d.missing:
            lines.append(f"  missing: {k}")
        for k in d.extra:
            lines.append(f"  extra:   {k}")
        for k in d.wrong_pw1:
            lines.append(f"  pw1:     {k}")
    return TableReport(label, "\n".join(lines) + "\n", tuple(diffs))
