"""Fundamental cycles of real curve arrangements over Z/4.

An arrangement is abstract incidence data: circles of two families (P and
Q), plus two lists of regions with signed boundary coefficients on the
circles.  A fundamental cycle is a solution of

    sum l_i [P_i] + sum k-_k [dZ-_k] = 2 sum m_j [Q_j] + 2 sum k+_l [dZ+_l]

in the free Z/4 module on the circles, with every l_i and k-_k odd.  The
parities of the m and k+ coefficients encode the complex separation of
the surface built from the arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .z4 import Parity, Z4Matrix, z4_solution_space, z4_solve_parity


@dataclass(frozen=True)
class Region:
    label: str
    boundary: tuple[tuple[str, int], ...]  # (circle label, +1 or -1)
    euler_char: int = 1

    def __post_init__(self):
        for name, c in self.boundary:
            if c not in (1, -1):
                raise ValueError(f"boundary coefficient of {name} must be +1 or -1")
        names = [n for n, _ in self.boundary]
        if len(set(names)) != len(names):
            raise ValueError(f"region {self.label}: repeated boundary circle")


@dataclass(frozen=True)
class CurveArrangement:
    p_circles: tuple[str, ...]
    q_circles: tuple[str, ...]
    minus_regions: tuple[Region, ...]
    plus_regions: tuple[Region, ...]

    def __post_init__(self):
        self.validate()

    @property
    def circles(self) -> tuple[str, ...]:
        return self.p_circles + self.q_circles

    def validate(self, strict: bool = False) -> None:
        names = list(self.circles)
        if len(set(names)) != len(names):
            raise ValueError("circle labels must be unique")
        known = set(names)
        labels = [r.label for r in self.minus_regions + self.plus_regions]
        if len(set(labels)) != len(labels):
            raise ValueError("region labels must be unique")
        for r in self.minus_regions + self.plus_regions:
            for n, _ in r.boundary:
                if n not in known:
                    raise ValueError(f"region {r.label}: unknown circle {n}")
        if strict:
            # every circle should see a region on each side
            for n in names:
                touching = sum(
                    1
                    for r in self.minus_regions + self.plus_regions
                    for m, _ in r.boundary
                    if m == n
                )
                if touching < 2:
                    raise ValueError(f"circle {n} is not two-sided in the data")

    def unknown_labels(self) -> list[str]:
        return (
            [f"l[{n}]" for n in self.p_circles]
            + [f"k-[{r.label}]" for r in self.minus_regions]
            + [f"m[{n}]" for n in self.q_circles]
            + [f"k+[{r.label}]" for r in self.plus_regions]
        )


@dataclass(frozen=True)
class FundamentalCycle:
    lambdas: tuple[int, ...]
    kappa_minus: tuple[int, ...]
    mus: tuple[int, ...]
    kappa_plus: tuple[int, ...]

    def coefficients(self) -> tuple[int, ...]:
        return self.lambdas + self.kappa_minus + self.mus + self.kappa_plus


def _system(arr: CurveArrangement) -> tuple[Z4Matrix, list[int], tuple[Parity, ...]]:
    """Coefficient matrix in the circle basis, rhs 0, parity mask."""
    circles = arr.circles
    index = {n: i for i, n in enumerate(circles)}
    np, nm = len(arr.p_circles), len(arr.minus_regions)
    nq, nl = len(arr.q_circles), len(arr.plus_regions)
    cols = np + nm + nq + nl
    rows = [[0] * cols for _ in circles]
    for i, n in enumerate(arr.p_circles):
        rows[index[n]][i] = 1
    for k, r in enumerate(arr.minus_regions):
        for n, c in r.boundary:
            rows[index[n]][np + k] = (rows[index[n]][np + k] + c) % 4
    for j, n in enumerate(arr.q_circles):
        rows[index[n]][np + nm + j] = 2  # -2 = 2 mod 4
    for l, r in enumerate(arr.plus_regions):
        for n, c in r.boundary:
            col = np + nm + nq + l
            rows[index[n]][col] = (rows[index[n]][col] + 2 * c) % 4
    mask = (Parity.ODD,) * np + (Parity.ODD,) * nm + (Parity.FREE,) * (nq + nl)
    return Z4Matrix.from_entries(rows, cols), [0] * len(circles), mask


def _split(arr: CurveArrangement, x: Sequence[int]) -> FundamentalCycle:
    np, nm = len(arr.p_circles), len(arr.minus_regions)
    nq = len(arr.q_circles)
    return FundamentalCycle(
        tuple(x[:np]),
        tuple(x[np : np + nm]),
        tuple(x[np + nm : np + nm + nq]),
        tuple(x[np + nm + nq :]),
    )


def solve_fundamental_cycle(arr: CurveArrangement) -> Optional[FundamentalCycle]:
    """A fundamental cycle of the arrangement, or None if none exists."""
    a, b, mask = _system(arr)
    x = z4_solve_parity(a, b, mask)
    return None if x is None else _split(arr, x)


def subgroup_membership(arr: CurveArrangement) -> bool:
    """Does sum [P_i] lie in the subgroup spanned by 2[P_i], 2[Q_j],
    2 dZ+_l inside the circle module modulo the minus-region boundaries?

    An independent reformulation of fundamental-cycle feasibility.
    """
    circles = arr.circles
    index = {n: i for i, n in enumerate(circles)}
    cols: list[list[int]] = []
    for i, n in enumerate(arr.p_circles):
        col = [0] * len(circles)
        col[index[n]] = 2
        cols.append(col)
    for n in arr.q_circles:
        col = [0] * len(circles)
        col[index[n]] = 2
        cols.append(col)
    for r in arr.plus_regions:
        col = [0] * len(circles)
        for n, c in r.boundary:
            col[index[n]] = (col[index[n]] + 2 * c) % 4
        cols.append(col)
    for r in arr.minus_regions:
        col = [0] * len(circles)
        for n, c in r.boundary:
            col[index[n]] = (col[index[n]] + c) % 4
        cols.append(col)
    target = [0] * len(circles)
    for n in arr.p_circles:
        target[index[n]] = (target[index[n]] + 1) % 4
    mat = Z4Matrix.from_entries(
        [[cols[c][i] for c in range(len(cols))] for i in range(len(circles))],
        len(cols),
    )
    mask = (Parity.FREE,) * len(cols)
    return z4_solve_parity(mat, target, mask) is not None


def separation_from_cycle(c: FundamentalCycle) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Quoter 2-colorings: Q-circles by mu parity, plus-regions by kappa+
    parity (same parity = same quoter)."""
    return tuple(m % 2 for m in c.mus), tuple(k % 2 for k in c.kappa_plus)


def _minus_side_colors(arr: CurveArrangement) -> tuple[tuple[int, ...], bool]:
    """2-color the minus regions by which side of the Q curve they lie on.

    Color 0 marks the side containing the P circles; adjacent regions
    across a Q-circle get opposite colors.  Regions whose component of
    the adjacency graph carries no P pin default to color 1.  Returns
    (colors, consistent).
    """
    n = len(arr.minus_regions)
    colors: list[Optional[int]] = [None] * n
    consistent = True
    touches_p = [
        any(name in arr.p_circles for name, _ in r.boundary)
        for r in arr.minus_regions
    ]
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for q in arr.q_circles:
        inc = [k for k, r in enumerate(arr.minus_regions) if any(m == q for m, _ in r.boundary)]
        if len(inc) == 2:
            adjacency[inc[0]].append(inc[1])
            adjacency[inc[1]].append(inc[0])
    for start in range(n):
        if colors[start] is not None:
            continue
        component = [start]
        colors[start] = 0
        stack = [start]
        while stack:
            k = stack.pop()
            for other in adjacency[k]:
                if colors[other] is None:
                    colors[other] = 1 - colors[k]
                    component.append(other)
                    stack.append(other)
                elif colors[other] == colors[k]:
                    consistent = False
        pins = {colors[k] for k in component if touches_p[k]}
        if len(pins) == 2:
            consistent = False
        elif pins == {1}:
            for k in component:
                colors[k] = 1 - colors[k]
        elif not pins:
            for k in component:
                colors[k] = 1 - colors[k]  # unpinned: default to the +Q side
    return tuple(c or 0 for c in colors), consistent


@dataclass(frozen=True)
class AmbiguityReport:
    """Parity-preserving homogeneous shifts of the cycle, compared with
    the three canonical doubling classes (whole real part; plus side with
    the P curve; +Q minus side with the Q curve)."""

    generators: tuple[tuple[int, ...], ...]
    canonical: tuple[tuple[int, ...], ...]
    contained_in_canonical_span: bool
    side_coloring_consistent: bool
    unknowns: tuple[str, ...] = field(default=())


def ambiguity_generators(arr: CurveArrangement) -> AmbiguityReport:
    """Solution-space ambiguity of the fundamental cycle, as a report."""
    a, b, mask = _system(arr)
    space = z4_solution_space(a, b, mask)
    if space is None:
        raise ValueError("arrangement admits no fundamental cycle")
    _, gens = space
    np, nm = len(arr.p_circles), len(arr.minus_regions)
    nq, nl = len(arr.q_circles), len(arr.plus_regions)
    cols = np + nm + nq + nl
    whole = [0] * cols
    for k in range(nm):
        whole[np + k] = 2
    for l in range(nl):
        whole[np + nm + nq + l] = 2
    plus_and_p = [0] * cols
    for i in range(np):
        plus_and_p[i] = 2
    for l in range(nl):
        plus_and_p[np + nm + nq + l] = 2
    side, consistent = _minus_side_colors(arr)
    minusplus_and_q = [0] * cols
    for k in range(nm):
        if side[k] == 1:
            minusplus_and_q[np + k] = 2
    for j in range(nq):
        minusplus_and_q[np + nm + j] = 2
    canonical = (tuple(whole), tuple(plus_and_p), tuple(minusplus_and_q))
    contained = all(_in_span(canonical, g) for g in gens)
    return AmbiguityReport(
        tuple(gens), canonical, contained, consistent, tuple(arr.unknown_labels())
    )


def _in_span(gens: Sequence[tuple[int, ...]], v: tuple[int, ...]) -> bool:
    nonzero = [g for g in gens if any(g)]
    if not nonzero:
        return not any(v)
    mat = Z4Matrix.from_entries(
        [[g[i] for g in nonzero] for i in range(len(v))], len(nonzero)
    )
    return z4_solve_parity(mat, list(v), (Parity.FREE,) * len(nonzero)) is not None


@dataclass(frozen=True)
class LoopData:
    """Data of an immersed loop: disorienting flag, isolated hits of the
    Q curve, isolated hits of the plus part, and P-Q intersection points
    passed."""

    disorienting: bool
    isolated_q_hits: int
    isolated_plus_hits: int
    pq_points_passed: int

    def __post_init__(self):
        if min(self.isolated_q_hits, self.isolated_plus_hits, self.pq_points_passed) < 0:
            raise ValueError("counts must be nonnegative")


def loop_form_value(d: LoopData) -> int:
    """Form value along a loop: 2e + 2i_Q + 2i_plus + i_PQ mod 4."""
    return (
        2 * int(d.disorienting)
        + 2 * d.isolated_q_hits
        + 2 * d.isolated_plus_hits
        + d.pq_points_passed
    ) % 4


def boundary_values(kind: str, data: object = None) -> int:
    """Closed-form values on distinguished boundary loops.

    kind 'tangency': always 1.
    kind 'minus-region': data = Euler characteristic, value 2*chi mod 4.
    kind 'p-component': data = even self-intersection number, value
    data/2 mod 4.
    kind 'lk': data = (positive count, negative count), value their
    difference mod 4.
    """
    if kind == "tangency":
        return 1
    if kind == "minus-region":
        return (2 * int(data)) % 4  # type: ignore[arg-type]
    if kind == "p-component":
        s = int(data)  # type: ignore[arg-type]
        if s % 2 != 0:
            raise ValueError("self-intersection number must be even")
        return (s // 2) % 4
    if kind == "lk":
        plus, minus = data  # type: ignore[misc]
        return (int(plus) - int(minus)) % 4
    raise ValueError(f"unknown boundary value kind: {kind!r}")


# ---------------------------------------------------------------------------
# arrangement text format


def parse_arrangement(text: str) -> CurveArrangement:
    """Line format: 'P <label>', 'Q <label>',
    'Z- <label> chi=<int> : <+1|-1>*<circle> ...',
    'Z+ <label> [chi=<int>] : ...'."""
    p: list[str] = []
    q: list[str] = []
    minus: list[Region] = []
    plus: list[Region] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "P":
            p.append(rest)
        elif head == "Q":
            q.append(rest)
        elif head in ("Z-", "Z+"):
            before, _, boundary = rest.partition(":")
            words = before.split()
            if not words:
                raise ValueError(f"line {ln}: region needs a label")
            label = words[0]
            chi = 1
            for w in words[1:]:
                if w.startswith("chi="):
                    chi = int(w[4:])
                else:
                    raise ValueError(f"line {ln}: unexpected token {w!r}")
            terms = []
            for term in boundary.split():
                coeff, _, name = term.partition("*")
                if coeff not in ("+1", "-1") or not name:
                    raise ValueError(f"line {ln}: bad boundary term {term!r}")
                terms.append((name, 1 if coeff == "+1" else -1))
            region = Region(label, tuple(terms), chi)
            (minus if head == "Z-" else plus).append(region)
        else:
            raise ValueError(f"line {ln}: unknown directive {head!r}")
    return CurveArrangement(tuple(p), tuple(q), tuple(minus), tuple(plus))


def render_arrangement(arr: CurveArrangement) -> str:
    lines = [f"P {n}" for n in arr.p_circles] + [f"Q {n}" for n in arr.q_circles]
    for head, regions in (("Z-", arr.minus_regions), ("Z+", arr.plus_regions)):
        for r in regions:
            terms = " ".join(f"{'+1' if c == 1 else '-1'}*{n}" for n, c in r.boundary)
            lines.append(f"{head} {r.label} chi={r.euler_char} : {terms}")
    return "\n".join(lines) + "\n"
