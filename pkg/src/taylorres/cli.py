"""Command-line front end.

Exit codes: 0 success, 1 check failures or disagreement, 2 usage or parse
errors, 3 envelope exceeded.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from typing import Sequence

from .betti import betti_formula, betti_oracle
from .classify import classify
from .enumeration import FAMILIES, enumerate_ideals
from .errors import EnvelopeError
from .harness import CHECKS, run_checks
from .monomial import (MonomialIdeal, ParseError, RedundantGeneratorWarning,
                       format_monomial, parse_ideal)
from .quotients import all_orders, deepest_failure, find_order
from .report import FORMATS, emit_record, emit_report, format_order, format_set
from .taylor import build_taylor, format_subset, is_minimal, is_minimal_subset_test, verify_complex

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ENVELOPE = 0, 1, 2, 3

BETTI_NOTE = "beta_q indexes the resolution of I (beta_0 = number of generators), not of S/I"


class UsageError(Exception):
    pass


def _parse(args) -> tuple[MonomialIdeal, list[str]]:
    if args.vars is None:
        raise UsageError("--vars is required for ideal text input")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", RedundantGeneratorWarning)
        ideal = parse_ideal(args.ideal, args.vars)
    notes = [str(w.message) for w in caught if issubclass(w.category, RedundantGeneratorWarning)]
    for note in notes:
        print(f"warning: {note}", file=sys.stderr)
    return ideal, notes


def _base(ideal: MonomialIdeal, notes: list[str]) -> dict:
    out = {"ideal": str(ideal), "vars": ideal.n, "generators": ideal.r}
    if notes:
        out["warnings"] = notes
    return out


def cmd_gens(args) -> int:
    ideal, notes = _parse(args)
    record = _base(ideal, notes)
    record["degrees"] = list(ideal.degrees())
    print(emit_record(record, args.format), end="")
    return EXIT_OK


def cmd_taylor(args) -> int:
    ideal, notes = _parse(args)
    T = build_taylor(ideal)
    record = _base(ideal, notes)
    record["ranks"] = list(T.ranks())
    record["complex"] = verify_complex(T)
    record["minimal"] = is_minimal(T)
    if args.matrices:
        blocks = []
        for q in range(1, T.r):
            blocks.append({
                "q": q,
                "rows": T.rank(q - 1),
                "cols": T.rank(q),
                "entries": [[format_subset(e.row), format_subset(e.col), e.sign,
                             format_monomial(e.coefficient)] for e in T.differential(q)],
            })
        record["differentials"] = blocks
    print(emit_record(record, args.format), end="")
    return EXIT_OK if record["complex"] else EXIT_FAIL


def cmd_is_minimal(args) -> int:
    ideal, notes = _parse(args)
    record = _base(ideal, notes)
    by_matrix = is_minimal(build_taylor(ideal))
    by_subsets = is_minimal_subset_test(ideal)
    record["minimal"] = by_matrix
    record["subset_test"] = by_subsets
    print(emit_record(record, args.format), end="")
    return EXIT_OK if by_matrix == by_subsets else EXIT_FAIL


def _ordered_record(o) -> dict:
    return {"order": format_order(o.order),
            "generators": [str(u) for u in o.ordered_generators],
            "sets": [format_set(s) for s in o.sets]}


def cmd_linquo(args) -> int:
    ideal, notes = _parse(args)
    record = _base(ideal, notes)
    found = find_order(ideal)
    record["linear_quotients"] = found is not None
    if found is not None:
        record.update(_ordered_record(found))
        if args.all:
            record["all_orders"] = [format_order(o.order) for o in all_orders(ideal)]
    else:
        fail = deepest_failure(ideal)
        record["failure"] = {
            "order": format_order(fail.order),
            "position": fail.position + 1,
            "generator": str(ideal.generators[fail.order[fail.position]]),
            "witness": str(fail.witness),
        }
    print(emit_record(record, args.format), end="")
    return EXIT_OK


def _table_record(table) -> dict:
    out = {"total": list(table.total)}
    if table.graded is not None:
        out["graded"] = {f"{q},{j}": b for (q, j), b in table.graded.items()}
    return out


def cmd_betti(args) -> int:
    ideal, notes = _parse(args)
    record = _base(ideal, notes)
    record["note"] = BETTI_NOTE
    tables = {}
    if args.method in ("formula", "both"):
        ordered = find_order(ideal)
        if ordered is None:
            if args.method == "formula":
                raise UsageError(f"({ideal}) has no linear-quotients order; "
                                 "the formula does not apply")
            record["formula"] = None
        else:
            tables["formula"] = betti_formula(ordered)
            record["formula"] = _table_record(tables["formula"])
    if args.method in ("oracle", "both"):
        tables["oracle"] = betti_oracle(ideal)
        record["oracle"] = _table_record(tables["oracle"])
    status = EXIT_OK
    if args.method == "both" and "formula" in tables:
        agree = tables["formula"].total == tables["oracle"].total
        record["agree"] = agree
        status = EXIT_OK if agree else EXIT_FAIL
    print(emit_record(record, args.format), end="")
    if args.figure:
        from .figures import plot_betti_diagram, plot_betti_totals
        if "oracle" in tables and args.method == "oracle":
            plot_betti_diagram(tables["oracle"], args.figure, title=str(ideal))
        else:
            plot_betti_totals(tables, args.figure, title=str(ideal))
    return status


def cmd_classify(args) -> int:
    ideal, notes = _parse(args)
    record = classify(ideal).to_dict()
    if notes:
        record["warnings"] = notes
    print(emit_record(record, args.format), end="")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.vars is None:
        raise UsageError("--vars is required")
    stream = enumerate_ideals(args.vars, args.max_deg, args.max_gens, args.family)
    command = {"vars": args.vars, "max_deg": args.max_deg, "max_gens": args.max_gens,
               "family": args.family}
    checks = [c for c in (args.checks or "").split(",") if c]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    if not checks:
        ideals = []
        exhaustive = True
        for k, ideal in enumerate(stream):
            if args.limit is not None and k >= args.limit:
                exhaustive = False
                break
            ideals.append(str(ideal))
        record = {**command, "exhaustive": exhaustive, "count": len(ideals), "ideals": ideals}
        print(emit_record(record, args.format), end="")
        return EXIT_OK
    report = run_checks(stream, checks, command=command, limit=args.limit, jobs=args.jobs)
    print(emit_report(report, args.format), end="")
    if args.figure:
        from .figures import plot_run_summary
        plot_run_summary(report, args.figure)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", type=int, help="number of variables n")
    common.add_argument("--format", choices=FORMATS, default="human")
    common.add_argument("--limit", type=int, help="truncate enumeration streams")

    parser = argparse.ArgumentParser(
        prog="taylorres", parents=[common],
        description="Taylor resolutions, linear quotients and Betti numbers of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, ideal=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if ideal:
            p.add_argument("ideal", help="generators, e.g. 'x1^2*x2, x1*x3'")
        p.set_defaults(func=func)
        return p

    add("gens", cmd_gens, "canonical minimal generators")
    p = add("taylor", cmd_taylor, "Taylor complex ranks and d o d check")
    p.add_argument("--matrices", action="store_true", help="list every differential entry")
    add("is-minimal", cmd_is_minimal, "is the Taylor resolution minimal")
    p = add("linquo", cmd_linquo, "find a linear-quotients order")
    p.add_argument("--all", action="store_true", help="also list every valid order")
    p = add("betti", cmd_betti, "Betti numbers (" + BETTI_NOTE + ")")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    p.add_argument("--figure", help="write a Betti plot to this file")
    add("classify", cmd_classify, "all classification verdicts")
    p = add("enumerate", cmd_enumerate, "enumerate ideals and run checks", ideal=False)
    p.add_argument("--max-deg", type=int, default=2)
    p.add_argument("--max-gens", type=int, default=None)
    p.add_argument("--family", choices=FAMILIES, default="all")
    p.add_argument("--checks", help="comma-separated: " + ",".join(CHECKS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--figure", help="write a pass/fail/skip chart to this file")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except EnvelopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENVELOPE
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
