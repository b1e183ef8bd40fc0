"""Exact linear algebra over Z/4 with per-unknown parity constraints.

Z/4 is a local ring, so a complete solver needs no Smith normal form:
oddness constraints are removed by substituting x = 1 + 2y, and the
resulting unconstrained system is solved through two GF(2) layers (the
value mod 2, then the even correction).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .gf2 import Gf2Matrix, gf2_solve


class Parity(enum.Enum):
    ODD = "odd"
    FREE = "free"


ParityMask = tuple[Parity, ...]


@dataclass(frozen=True)
class Z4Matrix:
    """Dense matrix with entries in {0, 1, 2, 3}."""

    rows: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            if any(v not in (0, 1, 2, 3) for v in row):
                raise ValueError("entries must be residues mod 4")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> "Z4Matrix":
        rows = tuple(tuple(int(v) % 4 for v in row) for row in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(rows, cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def mul_vector(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * v for a, v in zip(row, x)) % 4 for row in self.rows)


def _check_shapes(a: Z4Matrix, b: Sequence[int], mask: ParityMask) -> None:
    if len(b) != a.nrows:
        raise ValueError("right-hand side length does not match row count")
    if len(mask) != a.cols:
        raise ValueError("parity mask length does not match unknown count")


def _solve_unconstrained(a: Z4Matrix, b: Sequence[int]) -> Optional[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    """Solve a x = b over Z/4; returns (particular, kernel generators)."""
    m, n = a.nrows, a.cols
    # layer 1: the system mod 2
    a2 = Gf2Matrix(tuple(sum((row[j] & 1) << j for j in range(n)) for row in a.rows), n)
    b2 = sum(((b[i] & 1) << i) for i in range(m))
    sol2 = gf2_solve(a2, b2)
    if sol2 is None:
        return None
    z0 = tuple((sol2.particular >> j) & 1 for j in range(n))
    kern = [tuple((k >> j) & 1 for j in range(n)) for k in sol2.kernel_basis]
    # layer 2: even corrections; unknowns (u, eps) with z = z0 + sum(eps*k) + 2u
    r = [(bi - ai) % 4 for ai, bi in zip(a.mul_vector(z0), b)]
    assert all(v % 2 == 0 for v in r)
    h = [a.mul_vector(k) for k in kern]
    assert all(v % 2 == 0 for hv in h for v in hv)
    combo_rows = []
    for i in range(m):
        row = a2.rows[i]
        for t, hv in enumerate(h):
            row |= ((hv[i] >> 1) & 1) << (n + t)
        combo_rows.append(row)
    combo = Gf2Matrix(tuple(combo_rows), n + len(kern))
    rhs = sum(((r[i] >> 1) & 1) << i for i in range(m))
    sol = gf2_solve(combo, rhs)
    if sol is None:
        return None

    def assemble(bits: int) -> tuple[int, ...]:
        z = list(z0)
        for t, k in enumerate(kern):
            if (bits >> (n + t)) & 1:
                z = [(zi + ki) % 4 for zi, ki in zip(z, k)]
        return tuple((z[j] + 2 * ((bits >> j) & 1)) % 4 for j in range(n))

    particular = assemble(sol.particular)
    zero = tuple([0] * n)
    gens = {assemble(kb) for kb in sol.kernel_basis}
    gens.update(tuple(2 * ki % 4 for ki in k) for k in kern)
    gens.discard(zero)
    return particular, sorted(gens)


def _subst(mask: ParityMask) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Base point and column scaling realizing x = base + scale * z."""
    base = tuple(1 if p is Parity.ODD else 0 for p in mask)
    scale = tuple(2 if p is Parity.ODD else 1 for p in mask)
    return base, scale


def _scaled(a: Z4Matrix, scale: Sequence[int]) -> Z4Matrix:
    return Z4Matrix(tuple(tuple((v * s) % 4 for v, s in zip(row, scale)) for row in a.rows), a.cols)


def z4_solve_parity(a: Z4Matrix, b: Sequence[int], mask: ParityMask) -> Optional[tuple[int, ...]]:
    """Find x with a x = b, x odd exactly where the mask says ODD."""
    _check_shapes(a, b, mask)
    base, scale = _subst(mask)
    shifted = [(bi - ai) % 4 for ai, bi in zip(a.mul_vector(base), b)]
    sol = _solve_unconstrained(_scaled(a, scale), shifted)
    if sol is None:
        return None
    z, _ = sol
    return tuple((bi + s * zi) % 4 for bi, s, zi in zip(base, scale, z))


def _in_z4_span(gens: list[tuple[int, ...]], v: tuple[int, ...]) -> bool:
    if not gens:
        return all(x == 0 for x in v)
    mat = Z4Matrix(tuple(tuple(g[i] for g in gens) for i in range(len(v))), len(gens))
    return _solve_unconstrained(mat, v) is not None


def _reduce_generators(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Drop generators lying in the span of the others (largest first)."""
    kept = sorted(set(gens))
    for g in sorted(kept, reverse=True):
        rest = [h for h in kept if h != g]
        if _in_z4_span(rest, g):
            kept = rest
    return kept


def z4_solution_space(
    a: Z4Matrix, b: Sequence[int], mask: ParityMask
) -> Optional[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    """Particular solution plus generators of parity-preserving differences.

    The generators span every d with a d = 0 that is even in ODD positions,
    so x + d runs over all solutions with the same parity pattern.
    """
    _check_shapes(a, b, mask)
    x = z4_solve_parity(a, b, mask)
    if x is None:
        return None
    _, scale = _subst(mask)
    hom = _solve_unconstrained(_scaled(a, scale), [0] * a.nrows)
    assert hom is not None
    _, wgens = hom
    dgens = {tuple((s * wi) % 4 for s, wi in zip(scale, w)) for w in wgens}
    dgens.discard(tuple([0] * a.cols))
    return x, _reduce_generators(sorted(dgens))
