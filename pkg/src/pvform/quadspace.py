"""Quadratic spaces over GF(2) with Z/4-valued refinements.

A quadratic space is a GF(2) vector space V with a symmetric bilinear form
x.y and a function q: V -> Z/4 obeying q(x+y) = q(x) + q(y) + 2(x.y).
q is stored on a basis only; all other values follow from the extension
rule.  The Brown invariant is the mod-8 argument of the Gauss sum
sum_x i^q(x); it is defined exactly when q vanishes on the radical
("informative" spaces) and is None otherwise.

All objects are immutable and all functions pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import kernel
from .gf2 import Gf2Matrix, gf2_kernel, gf2_solve, in_span, span


@dataclass(frozen=True)
class QuadraticSpace:
    dim: int
    bilinear: Gf2Matrix
    q_basis: tuple[int, ...]

    def __post_init__(self):
        if self.bilinear.nrows != self.dim or self.bilinear.cols != self.dim:
            raise ValueError("bilinear matrix must be dim x dim")
        if not self.bilinear.is_symmetric():
            raise ValueError("bilinear form must be symmetric")
        if len(self.q_basis) != self.dim:
            raise ValueError("q_basis length must equal dim")
        for i, v in enumerate(self.q_basis):
            if v not in (0, 1, 2, 3):
                raise ValueError("q values are residues mod 4")
            if (v & 1) != self.bilinear.entry(i, i):
                raise ValueError("q(e_i) must equal e_i.e_i mod 2")

    def pair(self, x: int, y: int) -> int:
        """Bilinear pairing of two vectors (bitmask convention)."""
        return (self.bilinear.mul_vector(y) & x).bit_count() & 1


@dataclass(frozen=True)
class GaussSumProfile:
    """Counts of vectors by q-value; n0+n1+n2+n3 = 2^dim and n0 >= 1."""

    n0: int
    n1: int
    n2: int
    n3: int

    def magnitude_squared(self) -> int:
        return (self.n0 - self.n2) ** 2 + (self.n1 - self.n3) ** 2


def q_eval(space: QuadraticSpace, x: int) -> int:
    """q(x) by folding the extension rule over the support of x."""
    if x < 0 or x >> space.dim:
        raise ValueError("vector outside the space")
    total = 0
    seen = 0
    v = x
    while v:
        t = (v & -v).bit_length() - 1
        total += space.q_basis[t] + 2 * ((seen & space.bilinear.rows[t]).bit_count() & 1)
        seen |= 1 << t
        v &= v - 1
    return total % 4


def gauss_profile(space: QuadraticSpace) -> GaussSumProfile:
    return GaussSumProfile(*kernel.gauss_profile(space.dim, space.bilinear.rows, space.q_basis))


def radical_and_informative(space: QuadraticSpace) -> tuple[tuple[int, ...], bool]:
    """Basis of the radical V-perp, and whether q vanishes on it.

    q is linear on the radical, so vanishing on a basis is vanishing on all
    of it.
    """
    basis = gf2_kernel(space.bilinear)
    return basis, all(q_eval(space, v) == 0 for v in basis)


def brown(space: QuadraticSpace) -> Optional[int]:
    """Brown invariant mod 8, or None for a non-informative space.

    Computed exactly from the Gauss-sum profile: the sum lies on one of the
    eight half-axis directions exactly when q kills the radical, and
    vanishes otherwise.
    """
    p = gauss_profile(space)
    r = kernel.brown_from_counts(p.n0, p.n1, p.n2, p.n3)
    return None if r < 0 else r


def shift(space: QuadraticSpace, v: int) -> QuadraticSpace:
    """The refinement q' = q + 2(v . _) of the same bilinear form."""
    if v < 0 or v >> space.dim:
        raise ValueError("vector outside the space")
    qb = tuple(
        (space.q_basis[i] + 2 * ((space.bilinear.rows[i] & v).bit_count() & 1)) % 4
        for i in range(space.dim)
    )
    return QuadraticSpace(space.dim, space.bilinear, qb)


def direct_sum(a: QuadraticSpace, b: QuadraticSpace) -> QuadraticSpace:
    rows = tuple(a.bilinear.rows) + tuple(r << a.dim for r in b.bilinear.rows)
    return QuadraticSpace(a.dim + b.dim, Gf2Matrix(rows, a.dim + b.dim), a.q_basis + b.q_basis)


def characteristic_elements(space: QuadraticSpace) -> list[int]:
    """All u with u.x = x.x for every x (a coset of the radical)."""
    diag = sum(space.bilinear.entry(i, i) << i for i in range(space.dim))
    sol = gf2_solve(space.bilinear, diag)
    if sol is None:
        return []
    return sorted(sol.particular ^ v for v in span(sol.kernel_basis, space.dim))


def restrict(space: QuadraticSpace, basis: tuple[int, ...]) -> QuadraticSpace:
    """The quadratic space carried by the span of the given vectors."""
    n = len(basis)
    rows = tuple(
        sum(space.pair(basis[i], basis[j]) << j for j in range(n)) for i in range(n)
    )
    qb = tuple(q_eval(space, v) for v in basis)
    return QuadraticSpace(n, Gf2Matrix(rows, n), qb)


def _complement_basis(space: QuadraticSpace, radical: tuple[int, ...]) -> tuple[int, ...]:
    """Extend the radical to a full basis; returns the non-radical part."""
    chosen: list[int] = list(radical)
    out: list[int] = []
    for cand in (1 << i for i in range(space.dim)):
        if not chosen or not in_span(chosen, cand, space.dim):
            chosen.append(cand)
            out.append(cand)
    return tuple(out)


def nonsingular_quotient(space: QuadraticSpace) -> Optional[QuadraticSpace]:
    """V / V-perp with the descended form; None if not informative."""
    radical, informative = radical_and_informative(space)
    if not informative:
        return None
    return restrict(space, _complement_basis(space, radical))


def brown_by_decomposition(space: QuadraticSpace) -> Optional[int]:
    """Brown invariant via orthogonal splitting into rank-1/2 blocks.

    Independent of the Gauss-sum path: quotient by the radical, repeatedly
    split off either a vector with x.x = 1 or a hyperbolic pair, and add up
    the block contributions.
    """
    quotient = nonsingular_quotient(space)
    if quotient is None:
        return None
    total = 0
    for vecs in split_nonsingular(quotient):
        if len(vecs) == 1:
            total += 1 if q_eval(quotient, vecs[0]) == 1 else -1
        else:
            qa = q_eval(quotient, vecs[0])
            qb = q_eval(quotient, vecs[1])
            total += 4 if qa == 2 and qb == 2 else 0
    return total % 8


def split_nonsingular(space: QuadraticSpace) -> list[tuple[int, ...]]:
    """Orthogonal splitting of a nonsingular form into rank-1/2 blocks.

    Returns basis-vector tuples in ambient coordinates: (x,) with x.x = 1,
    or hyperbolic pairs (a, b) with a.a = b.b = 0, a.b = 1.  Depends only
    on the bilinear form.
    """
    blocks: list[tuple[int, ...]] = []
    basis = tuple(1 << i for i in range(space.dim))
    while basis:
        current = restrict(space, basis)
        diag = next((i for i in range(current.dim) if current.bilinear.entry(i, i)), None)
        if diag is not None:
            local_block = (1 << diag,)
            perp_rows = (current.bilinear.rows[diag],)
        else:
            row0 = current.bilinear.rows[0]
            b = 1 << ((row0 & -row0).bit_length() - 1)
            local_block = (1, b)
            perp_rows = (row0, current.bilinear.mul_vector(b))
        blocks.append(tuple(_lift(v, basis) for v in local_block))
        perp = gf2_kernel(Gf2Matrix(perp_rows, current.dim))
        basis = tuple(_lift(v, basis) for v in perp)
    return blocks


def _lift(v: int, basis: tuple[int, ...]) -> int:
    out = 0
    t = v
    while t:
        i = (t & -t).bit_length() - 1
        out ^= basis[i]
        t &= t - 1
    return out


def null_cobordant_witness(space: QuadraticSpace) -> Optional[tuple[int, ...]]:
    """Basis of a subspace H with H-perp = H and q zero on H, if one exists.

    Exists exactly when the Brown invariant is zero; found by greedily
    splitting off hyperbolic planes through q = 0 vectors in the quotient
    by the radical.
    """
    radical, informative = radical_and_informative(space)
    if not informative:
        raise ValueError("witness search requires an informative space")
    comp = _complement_basis(space, radical)
    if len(comp) > 20:
        raise ValueError("witness search supported up to quotient dimension 20")
    if len(comp) & 1:
        return None  # H-perp = H forces an even nonsingular quotient
    picked: list[int] = []
    basis = comp
    while basis:
        current = restrict(space, basis)
        x = next((v for v in range(1, 1 << current.dim) if q_eval(current, v) == 0), None)
        if x is None:
            return None
        y = next(1 << i for i in range(current.dim) if current.pair(x, 1 << i))
        perp = gf2_kernel(
            Gf2Matrix((current.bilinear.mul_vector(x), current.bilinear.mul_vector(y)), current.dim)
        )
        picked.append(_lift(x, basis))
        basis = tuple(_lift(v, basis) for v in perp)
    return tuple(radical) + tuple(picked)


def informative_subspace_check(
    space: QuadraticSpace, w_basis: tuple[int, ...]
) -> tuple[bool, Optional[int]]:
    """Is span(W) an informative subspace, and if so, Brown of q|W.

    The condition: the ambient perpendicular of W lies inside W, and q
    vanishes on it (q is linear there, so a basis check suffices).
    """
    rows = tuple(space.bilinear.mul_vector(w) for w in w_basis)
    perp = gf2_kernel(Gf2Matrix(rows, space.dim))
    w_list = list(w_basis)
    for v in perp:
        if w_list and not in_span(w_list, v, space.dim):
            return False, None
        if not w_list and v:
            return False, None
    if any(q_eval(space, v) != 0 for v in perp):
        return False, None
    return True, brown(restrict(space, tuple(w_basis)))


def all_symmetric_forms(dim: int) -> Iterator[Gf2Matrix]:
    """Every symmetric bilinear form on GF(2)^dim (exhaustive, small dims)."""
    positions = [(i, j) for i in range(dim) for j in range(i, dim)]
    for mask in range(1 << len(positions)):
        rows = [0] * dim
        for t, (i, j) in enumerate(positions):
            if (mask >> t) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Gf2Matrix(tuple(rows), dim)


def refinements_of_form(bilinear: Gf2Matrix) -> Iterator[QuadraticSpace]:
    """All 2^dim refinements of a bilinear form, in mask order."""
    dim = bilinear.cols
    base = tuple(bilinear.entry(i, i) for i in range(dim))
    for m in range(1 << dim):
        qb = tuple((base[i] + 2 * ((m >> i) & 1)) % 4 for i in range(dim))
        yield QuadraticSpace(dim, bilinear, qb)
