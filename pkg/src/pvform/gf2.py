"""Dense exact linear algebra over GF(2).

Vectors are int bitmasks (bit i = coordinate i); matrices store one bitmask
per row.  All values are immutable and every operation is a pure function,
so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense GF(2) matrix; entry (i, j) is bit j of rows[i]."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        if self.cols < 0:
            raise ValueError("negative column count")
        mask = (1 << self.cols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_entries(cls, entries: Iterable[Iterable[int]], cols: int | None = None) -> "Gf2Matrix":
        rows = []
        width = cols
        for row in entries:
            row = list(row)
            if width is None:
                width = len(row)
            if len(row) != width:
                raise ValueError("ragged rows")
            rows.append(sum((int(v) & 1) << j for j, v in enumerate(row)))
        return cls(tuple(rows), width or 0)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls((0,) * rows, cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def mul_vector(self, x: int) -> int:
        """Matrix * column vector (vector as bitmask over columns)."""
        out = 0
        for i, row in enumerate(self.rows):
            out |= ((row & x).bit_count() & 1) << i
        return out

    def transpose(self) -> "Gf2Matrix":
        rows = [0] * self.cols
        for i, row in enumerate(self.rows):
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                rows[j] |= 1 << i
                r &= r - 1
        return Gf2Matrix(tuple(rows), self.nrows)

    def is_symmetric(self) -> bool:
        return self.nrows == self.cols and self.transpose() == self


@dataclass(frozen=True)
class Gf2Solution:
    particular: int
    kernel_basis: tuple[int, ...]
    rank: int


def _eliminate(rows: list[int], rhs: list[int], cols: int) -> tuple[list[tuple[int, int]], list[int], list[int]]:
    """In-place row reduction; returns (pivots as (row, col), rows, rhs)."""
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(rows)) if (rows[i] >> c) & 1), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        rhs[r], rhs[p] = rhs[p], rhs[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> c) & 1:
                rows[i] ^= rows[r]
                rhs[i] ^= rhs[r]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    return pivots, rows, rhs


def gf2_solve(a: Gf2Matrix, b: int) -> Optional[Gf2Solution]:
    """Solve a x = b; returns a particular solution, kernel basis and rank.

    Returns None when the system is inconsistent.  The kernel basis spans
    every homogeneous solution, so |basis| = cols - rank.
    """
    if b < 0 or b >> a.nrows:
        raise ValueError("right-hand side has more bits than the matrix has rows")
    rows = list(a.rows)
    rhs = [(b >> i) & 1 for i in range(a.nrows)]
    pivots, rows, rhs = _eliminate(rows, rhs, a.cols)
    pivot_rows = {r for r, _ in pivots}
    for i in range(a.nrows):
        if i not in pivot_rows and rows[i] == 0 and rhs[i]:
            return None
    x = 0
    for r, c in pivots:
        if rhs[r]:
            x |= 1 << c
    pivot_cols = {c for _, c in pivots}
    kernel = []
    for free in range(a.cols):
        if free in pivot_cols:
            continue
        v = 1 << free
        for r, c in pivots:
            if (rows[r] >> free) & 1:
                v |= 1 << c
        kernel.append(v)
    return Gf2Solution(x, tuple(kernel), len(pivots))


def gf2_kernel(a: Gf2Matrix) -> tuple[int, ...]:
    sol = gf2_solve(a, 0)
    assert sol is not None
    return sol.kernel_basis


def gf2_rank(a: Gf2Matrix) -> int:
    sol = gf2_solve(a, 0)
    assert sol is not None
    return sol.rank


def in_span(vectors: Iterable[int], x: int, cols: int) -> bool:
    """Is x in the GF(2) span of the given vectors?"""
    mat = Gf2Matrix(tuple(vectors), cols).transpose()
    return gf2_solve(mat, x) is not None


def span_size(vectors: Iterable[int], cols: int) -> int:
    return 1 << gf2_rank(Gf2Matrix(tuple(vectors), cols))


def span(vectors: Iterable[int], cols: int) -> list[int]:
    """All elements of the span (small spaces only)."""
    basis = []
    mat: list[int] = []
    for v in vectors:
        if not mat or not in_span(mat, v, cols):
            mat.append(v)
            basis.append(v)
    out = [0]
    for v in basis:
        out += [w ^ v for w in out]
    return sorted(set(out))
