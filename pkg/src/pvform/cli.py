"""Command-line interface.

Verbs: brown, lattice-check, enumerate, tables, fundcycle, selfcheck.
Exit codes: 0 success, 1 mismatch/failed check, 2 usage or parse error,
3 precondition diagnostic.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import fundcycle as fc
from . import lattice as lat
from .enriques import PreconditionError, enumerate_separations, render_row
from .gf2 import Gf2Matrix
from .quadspace import QuadraticSpace, brown, radical_and_informative
from .surface import parse_components
from .tables import LABELS, MissingReferenceError, load_reference, table_report

OK, MISMATCH, USAGE, PRECONDITION = 0, 1, 2, 3


def parse_space(text: str) -> QuadraticSpace:
    """Text form: 'dim n', n rows of 0/1 characters, one row of n
    residues mod 4."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("dim "):
        raise ValueError("first line must be 'dim n'")
    n = int(lines[0][4:])
    if len(lines) != n + 2:
        raise ValueError(f"expected {n} matrix rows plus a q line")
    rows = []
    for ln in lines[1 : n + 1]:
        if len(ln) != n or any(ch not in "01" for ch in ln):
            raise ValueError(f"bad matrix row: {ln!r}")
        rows.append([int(ch) for ch in ln])
    q = tuple(int(v) % 4 for v in lines[n + 1].split())
    if len(q) != n:
        raise ValueError("q line length mismatch")
    return QuadraticSpace(n, Gf2Matrix.from_entries(rows, n), q)


def render_space(space: QuadraticSpace) -> str:
    lines = [f"dim {space.dim}"]
    for i in range(space.dim):
        lines.append("".join(str(space.bilinear.entry(i, j)) for j in range(space.dim)))
    lines.append(" ".join(str(v) for v in space.q_basis))
    return "\n".join(lines) + "\n"


def parse_lattice(text: str) -> lat.UnimodularLattice:
    """Named forms ('E8', 'U', '+1', '-1'), 'sum:' of comma-separated
    terms with optional 'k*' multiplicity, or 'rank n' plus n integer
    rows."""
    text = text.strip()
    named = {"E8": lat.e8, "U": lat.hyperbolic_plane, "+1": lat.plus_one, "-1": lat.minus_one}
    if text in named:
        return named[text]()
    if text.startswith("sum:"):
        parts = []
        for term in text[4:].split(","):
            term = term.strip()
            count = 1
            if "*" in term:
                mult, _, term = term.partition("*")
                count = int(mult)
            if term not in named:
                raise ValueError(f"unknown lattice name: {term!r}")
            parts += [named[term]()] * count
        if not parts:
            raise ValueError("empty sum")
        return lat.direct_sum(*parts)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("rank "):
        raise ValueError("expected a name, 'sum:...', or 'rank n' plus rows")
    n = int(lines[0][5:])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} rows")
    gram = tuple(tuple(int(v) for v in ln.split()) for ln in lines[1:])
    return lat.UnimodularLattice(gram)


def _read_input(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_brown(args) -> int:
    try:
        space = parse_space(_read_input(args.file))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    radical, informative = radical_and_informative(space)
    value = brown(space)
    print(f"dim {space.dim}  radical {len(radical)}  informative {'yes' if informative else 'no'}")
    print("brown undefined" if value is None else f"brown {value}")
    return OK


def cmd_lattice_check(args) -> int:
    try:
        lattice = parse_lattice(args.lattice if args.lattice else _read_input(args.file))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    sig = lat.signature(lattice)
    s8, br, ok = lat.brown_signature_check(lattice)
    print(f"rank {lattice.rank}  signature {sig}")
    print(f"signature mod 8 = {s8}  brown = {br}  {'agree' if ok else 'DISAGREE'}")
    return OK if ok else MISMATCH


def cmd_enumerate(args) -> int:
    try:
        u = parse_components(args.components)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    halves = None
    if args.halves:
        try:
            a, _, b = args.halves.partition("|")
            halves = (parse_components(a), parse_components(b))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE
    try:
        rows = enumerate_separations(u, halves=halves, torus_rule=not args.no_torus_rule)
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return PRECONDITION
    for row in rows:
        print(render_row(row))
    if args.reference:
        try:
            ref = load_reference(args.reference)
        except MissingReferenceError as exc:
            print(f"error: missing reference: {exc}", file=sys.stderr)
            return USAGE
        want = {r.key for _, case in ref.cases for r in case if r.partition.union == u}
        got = {r.key for r in rows}
        missing = sorted(want - got)
        extra = sorted(got - want)
        print(f"{len(want & got)}/{len(want)} rows match")
        for k in missing:
            print(f"missing: {k}")
        for k in extra:
            print(f"extra:   {k}")
        return OK if not missing and not extra else MISMATCH
    return OK


def cmd_tables(args) -> int:
    labels = LABELS if args.scenario == "all" else (args.scenario,)
    status = OK
    for label in labels:
        try:
            report = table_report(label)
        except MissingReferenceError as exc:
            print(f"error: missing reference: {exc}", file=sys.stderr)
            return USAGE
        sys.stdout.write(report.rendered)
        if not report.ok:
            status = MISMATCH
    return status


def cmd_fundcycle(args) -> int:
    try:
        arr = fc.parse_arrangement(_read_input(args.file))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    cycle = fc.solve_fundamental_cycle(arr)
    names = arr.unknown_labels()
    if cycle is None:
        print("no fundamental cycle")
    else:
        coeffs = cycle.coefficients()
        print("fundamental cycle: " + " ".join(f"{n}={v}" for n, v in zip(names, coeffs)))
        qsep, psep = fc.separation_from_cycle(cycle)
        print("separation: Q-circles " + _coloring(arr.q_circles, qsep))
        print("separation: plus-regions " + _coloring([r.label for r in arr.plus_regions], psep))
    if args.membership:
        member = fc.subgroup_membership(arr)
        print(f"subgroup membership: {'yes' if member else 'no'}")
        if (cycle is not None) != member:
            print("WARNING: membership disagrees with the solver", file=sys.stderr)
            return MISMATCH
    if args.ambiguity:
        if cycle is None:
            print("ambiguity: not applicable")
        else:
            rep = fc.ambiguity_generators(arr)
            for g in rep.generators:
                print("generator: " + " ".join(str(v) for v in g))
            for c in rep.canonical:
                print("canonical: " + " ".join(str(v) for v in c))
            print(f"contained in canonical span: {'yes' if rep.contained_in_canonical_span else 'no'}")
    return OK if cycle is not None or args.allow_infeasible else PRECONDITION


def _coloring(labels, parities) -> str:
    groups = {0: [], 1: []}
    for name, p in zip(labels, parities):
        groups[p].append(name)
    return "{" + ",".join(groups[0]) + "} | {" + ",".join(groups[1]) + "}"


def cmd_selfcheck(args) -> int:
    from .selfcheck import run_all

    results = run_all(verbose=True)
    failed = [r for r in results if not r.ok]
    if failed:
        for r in failed:
            print(f"FAILED: {r.name}: {r.detail}")
        return MISMATCH
    print(f"all {len(results)} criteria passed")
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pvform",
        description="Quadratic-form calculus over GF(2)/Z4 and the complex-separation tables of real Enriques surfaces",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("brown", help="Brown invariant of a quadratic space")
    p.add_argument("--file", default=None, help="space file ('-' or omit for stdin)")
    p.set_defaults(func=cmd_brown)

    p = sub.add_parser("lattice-check", help="signature vs Brown of the mod-2 reduction")
    p.add_argument("--lattice", default=None, help="named form: E8, U, +1, -1, or sum:E8,U,...")
    p.add_argument("--file", default=None, help="gram matrix file ('rank n' plus rows)")
    p.set_defaults(func=cmd_lattice_check)

    p = sub.add_parser("enumerate", help="admissible complex separations of a surface union")
    p.add_argument("--components", required=True, help="e.g. 4V1+2S")
    p.add_argument("--halves", default=None, help="fix the half split, e.g. '2V2|4S'")
    p.add_argument("--reference", default=None, choices=LABELS, help="diff against a bundled table")
    p.add_argument("--no-torus-rule", action="store_true", help="drop the separate-half rule for S1")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tables", help="reproduce a bundled classification table")
    p.add_argument("--scenario", default="all", choices=LABELS + ("all",))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("fundcycle", help="solve the fundamental-cycle system of an arrangement")
    p.add_argument("--file", default=None, help="arrangement file ('-' or omit for stdin)")
    p.add_argument("--membership", action="store_true", help="also run the subgroup-membership check")
    p.add_argument("--ambiguity", action="store_true", help="report the solution-space ambiguity")
    p.add_argument("--allow-infeasible", action="store_true", help="exit 0 even without a cycle")
    p.set_defaults(func=cmd_fundcycle)

    p = sub.add_parser("selfcheck", help="run the acceptance suite")
    p.set_defaults(func=cmd_selfcheck)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
