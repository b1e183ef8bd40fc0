"""Closed surfaces and their unions: homology models and Brown sets.

Component notation (shared with the CLI): ``S`` is the sphere, ``S<p>``
the orientable surface of genus p >= 1, ``V<p>`` the nonorientable
surface with p crosscaps.  A union is a multiset, written e.g.
``4V1+2S``.

First homology carries the mod-2 intersection form: a symplectic block
per handle of an orientable component, an identity block for a
nonorientable one, and the first Stiefel-Whitney dual is the all-ones
vector on each nonorientable block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import kernel
from .gf2 import Gf2Matrix
from .quadspace import QuadraticSpace, q_eval

RANK_GUARD = 24


@dataclass(frozen=True, order=True)
class SurfaceKind:
    """One closed surface: ('S', 0), ('S', p>=1) or ('V', p>=1)."""

    family: str
    genus: int

    def __post_init__(self):
        if self.family not in ("S", "V"):
            raise ValueError("family must be 'S' or 'V'")
        if self.family == "V" and self.genus < 1:
            raise ValueError("nonorientable genus must be >= 1")
        if self.family == "S" and self.genus < 0:
            raise ValueError("genus must be >= 0")

    @property
    def euler(self) -> int:
        if self.family == "S":
            return 2 - 2 * self.genus
        return 2 - self.genus

    @property
    def h1_rank(self) -> int:
        if self.family == "S":
            return 2 * self.genus
        return self.genus

    @property
    def orientable(self) -> bool:
        return self.family == "S"

    @property
    def token(self) -> str:
        if self.family == "S":
            return "S" if self.genus == 0 else f"S{self.genus}"
        return f"V{self.genus}"


SPHERE = SurfaceKind("S", 0)
TORUS = SurfaceKind("S", 1)


def nonorientable(p: int) -> SurfaceKind:
    return SurfaceKind("V", p)


def orientable(p: int) -> SurfaceKind:
    return SurfaceKind("S", p)


def _sort_key(kind: SurfaceKind) -> tuple:
    # nonorientable first by descending genus, then orientable, spheres last
    return (kind.family == "S", -kind.genus)


@dataclass(frozen=True)
class SurfaceUnion:
    """A multiset of closed surfaces (possibly empty)."""

    components: tuple[SurfaceKind, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(sorted(self.components, key=_sort_key))
        )

    def __len__(self) -> int:
        return len(self.components)

    def __bool__(self) -> bool:
        return bool(self.components)

    @property
    def token(self) -> str:
        return render_components(self)


EMPTY = SurfaceUnion(())

_TOKEN_RE = re.compile(r"^(\d+)?([SV])(\d+)?$")


def parse_components(text: str) -> SurfaceUnion:
    """Parse the component grammar, e.g. '4V1+2S' or 'S1+V2+4S'.

    Whitespace- and order-insensitive; raises ValueError on unknown
    tokens or malformed multiplicities.
    """
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    parts = [p.strip() for p in text.replace(" ", "").split("+")]
    comps: list[SurfaceKind] = []
    for part in parts:
        m = _TOKEN_RE.match(part)
        if not m:
            raise ValueError(f"unknown component token: {part!r}")
        count = int(m.group(1)) if m.group(1) else 1
        if count < 1:
            raise ValueError(f"multiplicity must be positive: {part!r}")
        family = m.group(2)
        genus = int(m.group(3)) if m.group(3) else 0
        if family == "V" and m.group(3) is None:
            raise ValueError(f"nonorientable token needs a genus: {part!r}")
        comps += [SurfaceKind(family, genus)] * count
    return SurfaceUnion(tuple(comps))


def render_components(u: SurfaceUnion) -> str:
    """Canonical text form: grouped multiplicities, V-parts first."""
    if not u:
        return "0"
    out = []
    i = 0
    comps = u.components
    while i < len(comps):
        j = i
        while j < len(comps) and comps[j] == comps[i]:
            j += 1
        n = j - i
        out.append(comps[i].token if n == 1 else f"{n}{comps[i].token}")
        i = j
    return "+".join(out)


def euler_char(u: SurfaceUnion) -> int:
    return sum(c.euler for c in u.components)


def h1_rank(u: SurfaceUnion) -> int:
    return sum(c.h1_rank for c in u.components)


@dataclass(frozen=True)
class FirstHomology:
    """H_1 of a union with the mod-2 intersection form.

    component_blocks[k] is the (start, stop) index range of component k;
    w1_dual is all-ones on nonorientable blocks and is a characteristic
    element of the form.
    """

    rank: int
    bilinear: Gf2Matrix
    w1_dual: int
    component_blocks: tuple[tuple[int, int], ...]


def homology_model(u: SurfaceUnion) -> FirstHomology:
    rank = h1_rank(u)
    rows = [0] * rank
    w1 = 0
    blocks = []
    pos = 0
    for c in u.components:
        start = pos
        if c.family == "S":
            for _ in range(c.genus):
                rows[pos] |= 1 << (pos + 1)
                rows[pos + 1] |= 1 << pos
                pos += 2
        else:
            for _ in range(c.genus):
                rows[pos] |= 1 << pos
                w1 |= 1 << pos
                pos += 1
        blocks.append((start, pos))
    return FirstHomology(rank, Gf2Matrix(tuple(rows), rank), w1, tuple(blocks))


def _base_q(h: FirstHomology) -> tuple[int, ...]:
    return tuple(h.bilinear.entry(i, i) for i in range(h.rank))


def refinements(u: SurfaceUnion) -> Iterator[QuadraticSpace]:
    """All 2^rank refinements of the intersection form, mask order."""
    h = homology_model(u)
    if h.rank > RANK_GUARD:
        raise ValueError(f"rank {h.rank} exceeds the enumeration guard")
    base = _base_q(h)
    for m in range(1 << h.rank):
        qb = tuple((base[i] + 2 * ((m >> i) & 1)) % 4 for i in range(h.rank))
        yield QuadraticSpace(h.rank, h.bilinear, qb)


@lru_cache(maxsize=None)
def _achievable_cached(components: tuple[SurfaceKind, ...]) -> frozenset[int]:
    h = homology_model(SurfaceUnion(components))
    if h.rank > RANK_GUARD:
        raise ValueError(f"rank {h.rank} exceeds the enumeration guard")
    mask = kernel.brown_residue_set(h.rank, h.bilinear.rows, _base_q(h))
    return frozenset(r for r in range(8) if (mask >> r) & 1)


def achievable_brown_set(u: SurfaceUnion) -> frozenset[int]:
    """Brown values over all refinements; {0} for the empty union."""
    return _achievable_cached(u.components)


@dataclass(frozen=True)
class MembraneData:
    """Arithmetic shadow of a membrane: normal Euler number, count of
    self-intersection points, Euler characteristic."""

    normal_euler: int
    self_intersections: int
    euler_char: int

    def __post_init__(self):
        if self.self_intersections < 0:
            raise ValueError("self-intersection count must be nonnegative")


def pontrjagin_square_surface(m: MembraneData) -> int:
    """Pontrjagin square of an immersed closed surface in a 4-manifold:
    normal Euler number + 2(self-intersections) + 2(Euler characteristic),
    mod 4."""
    return (m.normal_euler + 2 * m.self_intersections + 2 * m.euler_char) % 4


@dataclass(frozen=True)
class FixedPointData:
    """Fixed loci of an involution on a closed surface: two-sided circles,
    one-sided circles, isolated points."""

    two_sided_circles: int
    one_sided_circles: int
    isolated_points: int

    def __post_init__(self):
        if min(self.two_sided_circles, self.one_sided_circles, self.isolated_points) < 0:
            raise ValueError("counts must be nonnegative")


@dataclass(frozen=True)
class KalininClass:
    """Symbolic class record carried by a fixed-point set: the 1-cycle
    labels, the 0-class labels, and their mod-2 totals."""

    one_cycles: tuple[str, ...]
    zero_classes: tuple[str, ...]
    one_parity: int
    zero_parity: int


def kalinin_class(f: FixedPointData) -> KalininClass:
    """Class record [l_1]+..+[n_1]+..+[P_1]+..+<n_1>+..: every circle
    contributes a 1-cycle; isolated points and one-sided circles
    contribute 0-classes."""
    ones = tuple(f"[l{i + 1}]" for i in range(f.two_sided_circles)) + tuple(
        f"[n{j + 1}]" for j in range(f.one_sided_circles)
    )
    zeros = tuple(f"[P{k + 1}]" for k in range(f.isolated_points)) + tuple(
        f"<n{j + 1}>" for j in range(f.one_sided_circles)
    )
    return KalininClass(
        ones,
        zeros,
        (f.two_sided_circles + f.one_sided_circles) % 2,
        (f.one_sided_circles + f.isolated_points) % 2,
    )


def component_w1_vector(h: FirstHomology, component_index: int) -> int:
    """All-ones vector on one component's block (its w1 dual)."""
    start, stop = h.component_blocks[component_index]
    return ((1 << stop) - 1) & ~((1 << start) - 1)


def w1_value(space: QuadraticSpace, h: FirstHomology, component_index: int) -> int:
    """q evaluated at one component's w1 dual vector."""
    if space.dim != h.rank:
        raise ValueError("refinement does not match the homology model")
    start, stop = h.component_blocks[component_index]
    if start == stop:
        raise ValueError("component has no first homology")
    return q_eval(space, component_w1_vector(h, component_index))
