"""Command-line front end.

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on
input errors (unreadable files, bad expressions, unknown subcommands).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import __version__
from .configfile import ConfigFile, InputError, dumps, load, save
from .curves import Curve, count_curve_incidences, dof_check
from .engine import (
    THREADS_ENV,
    beck_report,
    count_incidences,
    default_threads,
    rich_lines,
)
from .errors import IncidenceError
from .extremal import INCIDENCE_FAMILIES, FamilyId, expected_incidences, generate
from .geometry import Configuration
from .specialize import invariance_check
from .sumproduct import ElementSet, es_report

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def fmt(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def emit(args, command: str, payload: dict, lines: list[str]) -> None:
    doc = {"command": command, **payload}
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=1) + "\n")
    if args.json:
        print(json.dumps(doc, indent=1))
    else:
        print("\n".join(lines))


def _family_file(family: FamilyId, n: int, ratio: str) -> ConfigFile:
    out = generate(family, n, ratio=ratio)
    if isinstance(out, ElementSet):
        return ConfigFile(Configuration.build(), sets={"A": out})
    return ConfigFile(out)


def cmd_gen(args) -> int:
    cf = _family_file(FamilyId(args.family), args.n, args.ratio)
    if args.out:
        save(cf, args.out)
        print(f"wrote {args.family} N={args.n} to {args.out}", file=sys.stderr)
    else:
        print(dumps(cf))
    return EXIT_OK


def cmd_count(args) -> int:
    cfg = load(args.inp).config
    r = count_incidences(cfg, args.threads)
    lines = [f"{k} = {fmt(v)}" for k, v in r.to_dict().items()]
    emit(args, "count", {"report": r.to_dict()}, lines)
    return EXIT_OK


def cmd_rich(args) -> int:
    cfg = load(args.inp).config
    res = rich_lines(cfg, args.k)
    lines = [f"m = {res.m}", f"threshold = {res.threshold}",
             f"rich lines = {len(res.records)}", f"ratio = {fmt(res.ratio)}"]
    lines += [f"  {r.richness}  {r.line}" for r in res.records]
    emit(args, "rich", {"report": res.to_dict()}, lines)
    return EXIT_OK


def cmd_beck(args) -> int:
    cfg = load(args.inp).config
    r = beck_report(cfg.points)
    emit(args, "beck", {"report": r.to_dict()}, [f"{k} = {v}" for k, v in r.to_dict().items()])
    return EXIT_OK


def cmd_sumprod(args) -> int:
    sets = load(args.inp).sets
    if not sets:
        raise InputError("file has no 'sets' section")
    reports, lines = {}, []
    for name, A in sets.items():
        r = es_report(A)
        reports[name] = r.to_dict()
        lines.append(f"{name}: |A| = {r.size}, |A+A| = {r.size_sum}, |A*A| = {r.size_prod}, "
                     f"exponent_ratio = {fmt(r.exponent_ratio)}")
    lines.append("(exponent_ratio = max(|A+A|, |A*A|) / |A|^(14/11), constant taken as 1)")
    emit(args, "sumprod", {"report": reports}, lines)
    return EXIT_OK


def cmd_specialize(args) -> int:
    cfg = load(args.inp).config
    r = invariance_check(cfg, args.trials, args.seed)
    lines = [f"trials = {r.trials}", f"passes = {r.passes}", f"failures = {r.failures}"]
    for mm in r.mismatches:
        lines.append(f"  mismatch in trial {mm['trial']} at {mm['assignment']}: {mm['entries']}")
    emit(args, "specialize", {"seed": args.seed, "report": r.to_dict()}, lines)
    return EXIT_OK if r.ok else EXIT_MISMATCH


def cmd_dof(args) -> int:
    cf = load(args.inp)
    curves = cf.curves or [Curve.from_line(l) for l in cf.config.lines]
    points = cf.config.points
    violations = dof_check(points, curves, args.k, args.s)
    incidences = count_curve_incidences(points, curves)
    lines = [f"points = {len(points)}", f"curves = {len(curves)}", f"incidences = {incidences}",
             f"violations = {len(violations)}",
             f"hypothesis holds = {'yes' if not violations else 'no'}"]
    lines += [f"  {v.kind}: points {list(v.points)} curves {list(v.curves)}" for v in violations[:50]]
    payload = {"k": args.k, "s": args.s, "incidences": incidences,
               "violations": [v.to_dict() for v in violations]}
    emit(args, "dof", payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    family = FamilyId(args.family)
    if family not in INCIDENCE_FAMILIES:
        raise InputError(f"{family.value} is not an incidence family")
    rows, ok = [], True
    for N in range(1, args.nmax + 1):
        r = count_incidences(generate(family, N), args.threads)
        want = expected_incidences(family, N)
        ok &= r.incidences == want
        rows.append({"N": N, "m": r.m, "n": r.n, "incidences": r.incidences, "expected": want,
                     "match": r.incidences == want, "main_term_ratio": r.main_term_ratio,
                     "st_ratio": r.st_ratio})
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    header = f"{'N':>3} {'m':>6} {'n':>6} {'I':>8} {'expected':>8}  {'main_term_ratio':>16} {'st_ratio':>14}"
    lines = [header] + [
        f"{r['N']:>3} {r['m']:>6} {r['n']:>6} {r['incidences']:>8} {r['expected']:>8}  "
        f"{fmt(r['main_term_ratio']):>16} {fmt(r['st_ratio']):>14}"
        for r in rows
    ]
    lines.append("all counts match" if ok else "MISMATCH")
    emit(args, "verify", {"family": family.value, "ok": ok, "rows": rows}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    common.add_argument("--threads", type=int, default=None,
                        help=f"counting threads (default ${THREADS_ENV} or the CPU count)")
    common.add_argument("--json", action="store_true", help="print the structured report instead of text")
    common.add_argument("--report", metavar="PATH", help="also write the structured report to PATH")

    p = argparse.ArgumentParser(prog="incidence", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    families = [f.value for f in FamilyId]

    s = sub.add_parser("gen", parents=[common], help="write a family configuration")
    s.add_argument("--family", required=True, choices=families)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ratio", default="2", help="ratio for geometric_progression")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("count", parents=[common], help="count incidences")
    s.add_argument("--in", dest="inp", required=True, metavar="PATH")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("rich", parents=[common], help="lines with at least K points")
    s.add_argument("--in", dest="inp", required=True, metavar="PATH")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_rich)

    s = sub.add_parser("beck", parents=[common], help="connecting-line statistics")
    s.add_argument("--in", dest="inp", required=True, metavar="PATH")
    s.set_defaults(func=cmd_beck)

    s = sub.add_parser("sumprod", parents=[common], help="sum and product set sizes")
    s.add_argument("--in", dest="inp", required=True, metavar="PATH")
    s.set_defaults(func=cmd_sumprod)

    s = sub.add_parser("specialize", parents=[common], help="incidence invariance under specialization")
    s.add_argument("--in", dest="inp", required=True, metavar="PATH")
    s.add_argument("--trials", type=int, default=100)
    s.set_defaults(func=cmd_specialize)

    s = sub.add_parser("dof", parents=[common], help="degrees-of-freedom check (lines used if no curves)")
    s.add_argument("--in", dest="inp", required=True, metavar="PATH")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.set_defaults(func=cmd_dof)

    s = sub.add_parser("verify", parents=[common], help="generate, count and compare for N = 1..NMAX")
    s.add_argument("--family", required=True, choices=families)
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--csv", metavar="PATH", help="write the ratio table as CSV")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except (IncidenceError, ValueError, KeyError, TypeError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
