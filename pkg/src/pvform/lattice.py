"""Unimodular integral lattices: exact signature and mod-2 reduction.

The signature oracle validates the Brown engine: for any unimodular
lattice L, the Z/4 form q(x) = x^2 mod 4 on L/2L has Brown invariant
congruent to the signature of L mod 8.  Well defined because
(x + 2y)^2 = x^2 + 4(x.y + y^2) = x^2 mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .gf2 import Gf2Matrix
from .quadspace import QuadraticSpace, brown


@dataclass(frozen=True)
class UnimodularLattice:
    gram: tuple[tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        if abs(_det(self.gram)) != 1:
            raise ValueError("gram determinant must be +1 or -1")

    @property
    def rank(self) -> int:
        return len(self.gram)


def _det(m: Sequence[Sequence[int]]) -> Fraction:
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for j in range(c, n):
                a[r][j] -= f * a[c][j]
    return det


def hyperbolic_plane() -> UnimodularLattice:
    return UnimodularLattice(((0, 1), (1, 0)), "U")


def plus_one() -> UnimodularLattice:
    return UnimodularLattice(((1,),), "+1")


def minus_one() -> UnimodularLattice:
    return UnimodularLattice(((-1,),), "-1")


_E8_ADJACENCY = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7))


def e8() -> UnimodularLattice:
    """The even negative-definite rank-8 lattice (signature -8)."""
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for i, j in _E8_ADJACENCY:
        g[i][j] = g[j][i] = 1
    return UnimodularLattice(tuple(tuple(row) for row in g), "E8")


def direct_sum(*parts: UnimodularLattice) -> UnimodularLattice:
    n = sum(p.rank for p in parts)
    g = [[0] * n for _ in range(n)]
    off = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                g[off + i][off + j] = p.gram[i][j]
        off += p.rank
    name = "+".join(p.name or "?" for p in parts) if parts else "0"
    return UnimodularLattice(tuple(tuple(row) for row in g), name)


def signature(lat: UnimodularLattice) -> int:
    """Positive minus negative inertia index, by exact rational congruence
    diagonalization (no floating point)."""
    n = lat.rank
    a = [[Fraction(v) for v in row] for row in lat.gram]
    pos = neg = 0
    idx = list(range(n))
    k = 0
    while k < n:
        p = next((r for r in range(k, n) if a[r][r] != 0), None)
        if p is None:
            # all remaining diagonal zero: mix in a row with a nonzero pairing
            r, c = next(
                (r, c)
                for r in range(k, n)
                for c in range(k, n)
                if a[r][c] != 0
            )
            for j in range(n):
                a[r][j] += a[c][j]
            for i in range(n):
                a[i][r] += a[i][c]
            p = r
        if p != k:
            a[k], a[p] = a[p], a[k]
            for i in range(n):
                a[i][k], a[i][p] = a[i][p], a[i][k]
        pivot = a[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            f = a[r][k] / pivot
            if f:
                for j in range(n):
                    a[r][j] -= f * a[k][j]
                for i in range(n):
                    a[i][r] -= f * a[i][k]
        k += 1
    del idx
    return pos - neg


def reduce_mod2(lat: UnimodularLattice) -> QuadraticSpace:
    """The GF(2) space L/2L with q(x) = x^2 mod 4 on basis lifts."""
    n = lat.rank
    rows = tuple(
        sum((lat.gram[i][j] & 1) << j for j in range(n)) for i in range(n)
    )
    qb = tuple(lat.gram[i][i] % 4 for i in range(n))
    return QuadraticSpace(n, Gf2Matrix(rows, n), qb)


def brown_signature_check(lat: UnimodularLattice) -> tuple[int, int, bool]:
    """(signature mod 8, Brown of the reduction, whether they agree)."""
    sig = signature(lat) % 8
    br = brown(reduce_mod2(lat))
    assert br is not None, "unimodular reductions are always informative"
    return sig, br, sig == br
