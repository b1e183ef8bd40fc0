"""Complex-separation classification for real Enriques surfaces.

The real part splits into two halves, each half into two quoters.  A
union of two quoters from distinct halves is a characteristic surface in
the quotient, and the Guillou-Marin congruence turns into a system of
mod-8 conditions coupling Euler characteristics of quoters with Brown
invariants of quadratic refinements carried by their first homology:

* both halves nonempty, for i, j in {1, 2}:
      chi(Q1_i) + chi(Q2_j) = 2 + chi(E)/4 + b_i s(j) + g_j s(i)  (mod 8)
  with s(1) = +1, s(2) = -1, where b_i, g_j range over the Brown values
  achievable by refinements of the quoter homology (0 for an empty
  quoter), and the second column carries the negated values because the
  two restrictions differ by the w1 shift;
* one half empty, for i in {1, 2}:
      chi(Q1_i) = 2 + chi(E)/4 + b_i  (mod 8)
  where b_i now ranges over Brown values of the restriction to the
  annihilator of w1 (the subspace of classes with zero self-intersection),
  kept only when that restriction is informative.

A partition is admissible when some assignment satisfies every
congruence.  The auxiliary value pw1 is the reading of the refinement on
the characteristic class of a nonorientable component of even Euler
characteristic; all such components must read the same value.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from . import kernel
from .gf2 import Gf2Matrix, gf2_kernel
from .quadspace import QuadraticSpace, brown, q_eval, restrict
from .surface import (
    EMPTY,
    RANK_GUARD,
    SurfaceKind,
    SurfaceUnion,
    achievable_brown_set,
    euler_char,
    homology_model,
    render_components,
)


class PreconditionError(ValueError):
    """Raised when an operation's stated precondition fails (CLI exit 3)."""


def chi_congruence(u: SurfaceUnion) -> bool:
    """Necessary condition chi = 0 mod 8 (signature -8 of the surface)."""
    return euler_char(u) % 8 == 0


def m_surface_check(u: SurfaceUnion) -> bool:
    """Total mod-2 Betti number equals 16, the value for the complex
    surface."""
    return sum(2 + c.h1_rank for c in u.components) == 16


def empty_quoter_chi(u: SurfaceUnion) -> frozenset[int]:
    """Euler characteristics in {-8, 0, 8} compatible with the congruence
    applied to an empty quoter of a single-component real part."""
    if len(u) != 1:
        raise PreconditionError("empty-quoter analysis needs a single component")
    return frozenset(x for x in (-8, 0, 8) if (2 + x // 4) % 8 == 0)


# ---------------------------------------------------------------------------
# quoter Brown data


def _quoter_token(q: SurfaceUnion) -> str:
    return render_components(q) if q else ""


@lru_cache(maxsize=None)
def _half_brown_set(components: tuple[SurfaceKind, ...]) -> frozenset[int]:
    """Brown values of the restriction to the annihilator of w1, over all
    refinements, dropping non-informative restrictions."""
    u = SurfaceUnion(components)
    h = homology_model(u)
    if h.rank > RANK_GUARD:
        raise ValueError(f"rank {h.rank} exceeds the enumeration guard")
    if h.w1_dual == 0:
        return achievable_brown_set(u)
    base = QuadraticSpace(
        h.rank, h.bilinear, tuple(h.bilinear.entry(i, i) for i in range(h.rank))
    )
    w_basis = gf2_kernel(Gf2Matrix((h.bilinear.mul_vector(h.w1_dual),), h.rank))
    sub = restrict(base, w_basis)
    mask = kernel.brown_residue_set(sub.dim, sub.bilinear.rows, sub.q_basis)
    return frozenset(r for r in range(8) if (mask >> r) & 1)


def _brown_set(q: SurfaceUnion, single_half: bool) -> frozenset[int]:
    if single_half:
        return _half_brown_set(q.components)
    return achievable_brown_set(q)


def _even_components(q: SurfaceUnion) -> tuple[int, ...]:
    """Indices of nonorientable components of even Euler characteristic."""
    return tuple(
        k
        for k, c in enumerate(q.components)
        if c.family == "V" and c.euler % 2 == 0
    )


@lru_cache(maxsize=None)
def _reading_profile(
    components: tuple[SurfaceKind, ...], single_half: bool
) -> dict[int, frozenset[int]]:
    """Map Brown value -> common pw1 readings achievable by a witness.

    A witness refinement contributes a reading only when all even-chi
    nonorientable components of the quoter read the same value.
    """
    u = SurfaceUnion(components)
    h = homology_model(u)
    evens = _even_components(u)
    vectors = []
    for k in evens:
        start, stop = h.component_blocks[k]
        vectors.append(((1 << stop) - 1) & ~((1 << start) - 1))
    w_basis: tuple[int, ...] = ()
    if single_half and h.w1_dual:
        w_basis = gf2_kernel(Gf2Matrix((h.bilinear.mul_vector(h.w1_dual),), h.rank))
    base = tuple(h.bilinear.entry(i, i) for i in range(h.rank))
    out: dict[int, set[int]] = {}
    for m in range(1 << h.rank):
        qb = tuple((base[i] + 2 * ((m >> i) & 1)) % 4 for i in range(h.rank))
        space = QuadraticSpace(h.rank, h.bilinear, qb)
        if single_half and h.w1_dual:
            value = brown(restrict(space, w_basis))
        else:
            value = brown(space)
        if value is None:
            continue
        readings = {q_eval(space, v) for v in vectors}
        if len(readings) == 1:
            out.setdefault(value, set()).add(readings.pop())
    return {k: frozenset(v) for k, v in out.items()}


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class QuoterPartition:
    """Four quoters: (half-1 quoter 1, half-1 quoter 2, half-2 quoter 1,
    half-2 quoter 2), stored in canonical order.  An entirely empty second
    half means the real part is a single half."""

    quoters: tuple[SurfaceUnion, SurfaceUnion, SurfaceUnion, SurfaceUnion]

    def __post_init__(self):
        object.__setattr__(self, "quoters", _canonical_quoters(self.quoters))

    @property
    def halves(self) -> tuple[SurfaceUnion, SurfaceUnion]:
        q = self.quoters
        return (
            SurfaceUnion(q[0].components + q[1].components),
            SurfaceUnion(q[2].components + q[3].components),
        )

    @property
    def single_half(self) -> bool:
        return not self.quoters[2] and not self.quoters[3]

    @property
    def union(self) -> SurfaceUnion:
        return SurfaceUnion(sum((q.components for q in self.quoters), ()))


def _quoter_sort_key(q: SurfaceUnion) -> tuple:
    return (-euler_char(q), _quoter_token(q))


def _half_sort_key(pair: tuple[SurfaceUnion, SurfaceUnion]) -> tuple:
    empty = not pair[0] and not pair[1]
    tokens = (_quoter_token(pair[0]), _quoter_token(pair[1]))
    return (empty, min(tokens), tokens)


def _canonical_quoters(quoters) -> tuple[SurfaceUnion, ...]:
    h1 = tuple(sorted(quoters[0:2], key=_quoter_sort_key))
    h2 = tuple(sorted(quoters[2:4], key=_quoter_sort_key))
    halves = sorted((h1, h2), key=_half_sort_key)
    return halves[0] + halves[1]


@dataclass(frozen=True)
class BrownAssignment:
    """A satisfying assignment: beta for the half-1 quoters, gamma for the
    half-2 quoters (None when that half is empty), plus one witness
    refinement (q values on the homology basis) per quoter."""

    beta: tuple[int, int]
    gamma: Optional[tuple[int, int]]
    witnesses: tuple[tuple[int, ...], ...]


def _constant(u: SurfaceUnion) -> int:
    chi = euler_char(u)
    if chi % 8 != 0:
        raise PreconditionError(f"chi={chi} is not 0 mod 8")
    return (2 + chi // 4) % 8


_SIGN = (1, -1)


def _assignments(p: QuoterPartition) -> Iterator[tuple[tuple[int, int], Optional[tuple[int, int]]]]:
    """All (beta, gamma) satisfying the congruence system, in canonical
    order."""
    c = _constant(p.union)
    q = p.quoters
    chi = [euler_char(x) for x in q]
    if p.single_half:
        beta = tuple((chi[i] - c) % 8 for i in range(2))
        if all(beta[i] in _brown_set(q[i], True) for i in range(2)):
            yield (beta[0], beta[1]), None
        return
    if not q[0] and not q[1]:
        return  # empty first half is normalized away by canonical order
    sets = [sorted(_brown_set(x, False)) for x in q]
    for b1, b2, g1, g2 in itertools.product(*sets):
        beta = (b1, b2)
        gamma = (g1, g2)
        ok = all(
            (chi[i] + chi[2 + j]) % 8
            == (c + beta[i] * _SIGN[j] + gamma[j] * _SIGN[i]) % 8
            for i in range(2)
            for j in range(2)
        )
        if ok:
            yield beta, gamma


def _witness(q: SurfaceUnion, value: int, single_half: bool) -> tuple[int, ...]:
    """First refinement (by mask order) whose Brown value is `value`."""
    h = homology_model(q)
    base = tuple(h.bilinear.entry(i, i) for i in range(h.rank))
    w_basis: tuple[int, ...] = ()
    if single_half and h.w1_dual:
        w_basis = gf2_kernel(Gf2Matrix((h.bilinear.mul_vector(h.w1_dual),), h.rank))
    for m in range(1 << h.rank):
        qb = tuple((base[i] + 2 * ((m >> i) & 1)) % 4 for i in range(h.rank))
        space = QuadraticSpace(h.rank, h.bilinear, qb)
        if single_half and h.w1_dual:
            got = brown(restrict(space, w_basis))
        else:
            got = brown(space)
        if got == value:
            return qb
    raise AssertionError("no witness for an achievable Brown value")


def ergm_satisfiable(p: QuoterPartition) -> Optional[BrownAssignment]:
    """First satisfying assignment of the congruence system, or None."""
    for beta, gamma in _assignments(p):
        single = gamma is None
        values = list(beta) + list(gamma or ())
        witnesses = tuple(
            _witness(q, v, single) for q, v in zip(p.quoters, values)
        )
        if single:
            witnesses = witnesses + ((), ())
        return BrownAssignment(beta, gamma, witnesses)
    return None


def pw1_set(p: QuoterPartition) -> Optional[frozenset[int]]:
    """Readings on even-chi nonorientable components over all witnesses.

    None when no such component exists; otherwise the set of values (all
    components must agree within a witness, and across quoters the common
    value must be realizable by each quoter separately).
    """
    carriers = [i for i, q in enumerate(p.quoters) if _even_components(q)]
    if not carriers:
        return None
    single = p.single_half
    out: set[int] = set()
    found = False
    for beta, gamma in _assignments(p):
        found = True
        values = list(beta) + list(gamma or (0, 0))
        candidates = {0, 2}
        for i in carriers:
            profile = _reading_profile(p.quoters[i].components, single)
            candidates &= profile.get(values[i], frozenset())
        out |= candidates
    if not found:
        raise PreconditionError("partition does not satisfy the congruences")
    return frozenset(out)


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True, order=True)
class ClassificationRow:
    key: str = field(init=False)
    partition: QuoterPartition = field(compare=False)
    pw1: Optional[frozenset[int]] = field(compare=False)
    flags: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "key", render_row(self, with_flags=False))


def render_quoter(q: SurfaceUnion) -> str:
    return f"({render_components(q)})" if q else "()"


def render_partition(p: QuoterPartition) -> str:
    q = p.quoters
    halves = []
    for a, b in ((q[0], q[1]), (q[2], q[3])):
        if not a and not b:
            halves.append("{}")
        else:
            halves.append("{" + render_quoter(a) + "+" + render_quoter(b) + "}")
    return halves[0] + "|" + halves[1]


def render_pw1(pw1: Optional[frozenset[int]]) -> str:
    if pw1 is None:
        return "-"
    return ",".join(str(v) for v in sorted(pw1)) if pw1 else "none"


def render_row(row: ClassificationRow, with_flags: bool = True) -> str:
    s = f"{render_partition(row.partition)}  pw1={render_pw1(row.pw1)}"
    if with_flags and row.flags:
        s += f"  {row.flags}"
    return s


def _parse_half(text: str) -> tuple[SurfaceUnion, SurfaceUnion]:
    from .surface import parse_components

    if text == "{}":
        return EMPTY, EMPTY
    if not (text.startswith("{(") and text.endswith(")}")):
        raise ValueError(f"malformed half: {text!r}")
    inner = text[2:-2]
    parts = inner.split(")+(")
    if len(parts) != 2:
        raise ValueError(f"malformed half: {text!r}")
    return tuple(parse_components(t) if t else EMPTY for t in parts)  # type: ignore[return-value]


def parse_row(line: str) -> ClassificationRow:
    """Inverse of render_row on canonical text."""
    fields = [f for f in line.strip().split("  ") if f]
    if len(fields) < 2 or not fields[1].startswith("pw1="):
        raise ValueError(f"malformed row: {line!r}")
    part_text, pw1_text = fields[0], fields[1][4:]
    flags = fields[2] if len(fields) > 2 else ""
    if flags not in ("", "*", "**"):
        raise ValueError(f"unknown flags: {flags!r}")
    halves = part_text.split("|")
    if len(halves) != 2:
        raise ValueError(f"malformed partition: {part_text!r}")
    (a, b), (c, d) = _parse_half(halves[0]), _parse_half(halves[1])
    if pw1_text == "-":
        pw1: Optional[frozenset[int]] = None
    elif pw1_text == "none":
        pw1 = frozenset()
    else:
        pw1 = frozenset(int(v) for v in pw1_text.split(","))
    return ClassificationRow(QuoterPartition((a, b, c, d)), pw1, flags)


def _sub_multisets(components: tuple[SurfaceKind, ...]) -> Iterator[tuple[tuple, tuple]]:
    """(subset, complement) pairs of a component multiset."""
    counts = Counter(components)
    kinds = sorted(counts, key=lambda k: (k.family, k.genus))
    ranges = [range(counts[k] + 1) for k in kinds]
    for take in itertools.product(*ranges):
        sub = []
        rest = []
        for k, t in zip(kinds, take):
            sub += [k] * t
            rest += [k] * (counts[k] - t)
        yield tuple(sub), tuple(rest)


def _half_splits(u: SurfaceUnion) -> Iterator[tuple[SurfaceUnion, SurfaceUnion]]:
    seen = set()
    for sub, rest in _sub_multisets(u.components):
        a, b = SurfaceUnion(sub), SurfaceUnion(rest)
        key = tuple(sorted((a.components, b.components)))
        if key in seen:
            continue
        seen.add(key)
        yield a, b


def _violates_torus_rule(half: SurfaceUnion) -> bool:
    return any(c == SurfaceKind("S", 1) for c in half.components) and len(half) > 1


def enumerate_separations(
    u: SurfaceUnion,
    halves: Optional[tuple[SurfaceUnion, SurfaceUnion]] = None,
    torus_rule: bool = True,
) -> list[ClassificationRow]:
    """All admissible complex separations of u, canonically sorted.

    `halves` fixes the decomposition into halves; otherwise every split is
    tried.  With `torus_rule` (the default), a genus-1 orientable
    component must be alone in its half.
    """
    if not chi_congruence(u):
        raise PreconditionError(f"chi={euler_char(u)} is not 0 mod 8")
    if halves is not None:
        got = SurfaceUnion(halves[0].components + halves[1].components)
        if got != u:
            raise PreconditionError("halves do not partition the surface union")
        splits: Iterator = iter([tuple(halves)])
    else:
        splits = _half_splits(u)
    rows: dict[str, ClassificationRow] = {}
    for h1, h2 in splits:
        if torus_rule and (_violates_torus_rule(h1) or _violates_torus_rule(h2)):
            continue
        if not h1 and not h2:
            continue
        for q11, q12 in _quoter_splits(h1):
            for q21, q22 in _quoter_splits(h2):
                p = QuoterPartition((q11, q12, q21, q22))
                key = render_partition(p)
                if key in rows:
                    continue
                if ergm_satisfiable(p) is None:
                    continue
                rows[key] = ClassificationRow(p, pw1_set(p))
    return sorted(rows.values())


def _quoter_splits(half: SurfaceUnion) -> Iterator[tuple[SurfaceUnion, SurfaceUnion]]:
    if not half:
        yield EMPTY, EMPTY
        return
    seen = set()
    for sub, rest in _sub_multisets(half.components):
        a, b = SurfaceUnion(sub), SurfaceUnion(rest)
        key = tuple(sorted((a.components, b.components)))
        if key in seen:
            continue
        seen.add(key)
        yield a, b
