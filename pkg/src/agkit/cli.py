"""Command-line interface: ``agkit <command> ...``.

Every command accepts ``--format kv`` for line-oriented ``key=value`` output;
the default is human-readable text. Exit status is 0 on success, 1 on a
negative check (``test --expect`` mismatch, ``implications`` with a
counterexample) and 2 on usage, input or file errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .enumerator import CENSUS_LABELS, CensusFilter, census, enumerate_ag
from .identities import IdentityId, catalog, classify, witness_failure
from .magma import MagmaError, Magma, find_left_identities, read_magma, render_magma
from .tabletest import lad_test, rad_test, render_report
from .theorems import check_implication, find_counterexample, paper_implications


class UsageError(Exception):
    pass


def _idents(text: Optional[str]) -> set[IdentityId]:
    if not text:
        return set()
    try:
        return {IdentityId.from_name(part) for part in text.split(",") if part.strip()}
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _orders(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"invalid order list {text!r}") from None


def _load(path: str) -> Magma:
    try:
        return read_magma(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    except MagmaError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _digits(m: Magma) -> str:
    return "".join(str(v) for v in m.linear)


def _kv(**fields) -> str:
    return " ".join(f"{k}={v}" for k, v in fields.items())


def cmd_classify(args, out) -> int:
    m = _load(args.file)
    props = classify(m)
    left_ids = find_left_identities(m)
    if args.format == "kv":
        out.write(_kv(file=args.file, order=m.order, ag_groupoid=int(IdentityId.LEFT_INVERTIVE in props),
                      left_identities=",".join(map(str, left_ids)) or "-") + "\n")
        for ident in IdentityId:
            if ident in props:
                out.write(_kv(identity=ident.kebab, holds=1) + "\n")
            else:
                w = witness_failure(m, ident)
                assignment = ",".join(f"{k}:{v}" for k, v in w.assignment.items())
                out.write(_kv(identity=ident.kebab, holds=0, witness=assignment,
                              lhs=w.lhs_value, rhs=w.rhs_value) + "\n")
        return 0
    out.write(f"{args.file}: order {m.order}, "
              f"{'an' if IdentityId.LEFT_INVERTIVE in props else 'not an'} AG-groupoid\n")
    out.write(f"left identities: {', '.join(map(str, left_ids)) or 'none'}\n")
    width = max(len(i.kebab) for i in IdentityId)
    for ident, eq in catalog().items():
        if ident in props:
            status = "holds"
        else:
            status = f"fails at {witness_failure(m, ident)}"
        out.write(f"  {ident.kebab.ljust(width)}  {str(eq).ljust(19)}  {status}\n")
    return 0


def cmd_test(args, out) -> int:
    m = _load(args.file)
    kind = "lad" if args.lad else "rad"
    report = lad_test(m) if args.lad else rad_test(m)
    name = kind.upper()
    if args.format == "kv":
        fd = report.first_disagreement
        out.write(_kv(file=args.file, test=kind, verdict=int(report.verdict),
                      first_disagreement="-" if fd is None else f"x:{fd[0]},a:{fd[1]},b:{fd[2]}") + "\n")
        for blk in report.per_x:
            out.write(_kv(x=blk.x, agree=int(blk.agree)) + "\n")
    else:
        if args.show_table:
            out.write(render_report(report))
        else:
            verdict = name if report.verdict else f"not {name}"
            out.write(f"{args.file}: {verdict}\n")
            if report.first_disagreement:
                x, a, b = report.first_disagreement
                out.write(f"first disagreement at x={x}, a={a}, b={b}\n")
    if args.expect is not None and report.verdict != (args.expect == "yes"):
        return 1
    return 0


def cmd_enumerate(args, out) -> int:
    filt = CensusFilter("matched", _idents(args.require), _idents(args.forbid))
    found: list[Magma] = []
    report = enumerate_ag(args.order, filt, sink=found.append, jobs=args.jobs,
                          allow_long_run=args.allow_long_run)
    if args.emit_tables:
        os.makedirs(args.emit_tables, exist_ok=True)
        for m in found:
            path = os.path.join(args.emit_tables, f"{_digits(m)}.tbl")
            with open(path, "w", encoding="utf-8") as f:
                f.write(render_magma(m, [f"AG-groupoid of order {m.order}, canonical representative"]))
    for m in found:
        out.write((_kv(table=_digits(m)) if args.format == "kv" else _digits(m)) + "\n")
    matched = report.per_filter["matched"]
    if args.format == "kv":
        out.write(_kv(order=args.order, total=report.total_ag, matched=matched) + "\n")
    else:
        out.write(f"# order {args.order}: {matched} of {report.total_ag} AG-groupoid classes matched\n")
    _stats(args, report)
    return 0


def _stats(args, report) -> None:
    if args.stats:
        sys.stderr.write(f"order {report.order}: {report.generated_nodes} nodes, "
                         f"{report.wall_time:.2f} s\n")


def cmd_census(args, out) -> int:
    reports = [census(n, jobs=args.jobs, allow_long_run=args.allow_long_run)
               for n in _orders(args.order)]
    if args.format == "kv":
        for r in reports:
            out.write(_kv(order=r.order, **r.counts()) + "\n")
    else:
        width = max(len(v) for v in CENSUS_LABELS.values())
        cols = [max(len(str(v)) for v in [r.order, *r.counts().values()]) for r in reports]
        out.write("Order".ljust(width) + "".join(f"  {str(r.order).rjust(w)}" for r, w in zip(reports, cols)) + "\n")
        for key, label in CENSUS_LABELS.items():
            out.write(label.ljust(width)
                      + "".join(f"  {str(r.counts()[key]).rjust(w)}" for r, w in zip(reports, cols)) + "\n")
    for r in reports:
        _stats(args, r)
    return 0


def cmd_implications(args, out) -> int:
    status = 0
    for impl in paper_implications():
        r = check_implication(impl, args.max_order, allow_long_run=args.allow_long_run, jobs=args.jobs)
        verdict = "holds" if r.holds else "counterexample"
        if args.format == "kv":
            out.write(_kv(name=impl.name, orders=f"1-{r.orders_checked.stop - 1}",
                          classes_checked=r.classes_checked, antecedent_matches=r.antecedent_matches,
                          verdict=verdict, caveat=int(impl.caveat is not None),
                          counterexample=_digits(r.counterexample) if r.counterexample else "-") + "\n")
        else:
            out.write(f"{impl.name}\n")
            out.write(f"  source: {impl.source}\n")
            out.write(f"  orders: 1..{r.orders_checked.stop - 1}\n")
            out.write(f"  classes checked: {r.classes_checked} ({r.antecedent_matches} satisfy the antecedent)\n")
            out.write(f"  verdict: {verdict}\n")
            if impl.caveat:
                out.write(f"  caveat: {impl.caveat}\n")
            if r.counterexample is not None:
                out.write("".join(f"    {line}\n" for line in render_magma(r.counterexample).splitlines()))
        if not r.holds:
            status = 1
    return status


def cmd_counterexample(args, out) -> int:
    required, forbidden = _idents(args.require), _idents(args.forbid)
    try:
        m = find_counterexample(required, forbidden, args.max_order,
                                allow_long_run=args.allow_long_run, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "kv":
        out.write(_kv(found=int(m is not None), order=m.order if m else "-",
                      table=_digits(m) if m else "-") + "\n")
    elif m is None:
        out.write(f"none up to order {args.max_order}\n")
    else:
        req = ",".join(sorted(i.kebab for i in required)) or "-"
        forb = ",".join(sorted(i.kebab for i in forbidden)) or "-"
        out.write(render_magma(m, [f"required: {req}", f"forbidden: {forb}"]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agkit", description="AG-groupoid classification and enumeration")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "kv"], default="text")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--jobs", type=int, default=1)
    search.add_argument("--allow-long-run", action="store_true",
                        help="permit orders 6 and above (hours to days)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="list the catalog identities a table satisfies")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("test", parents=[common], help="extended-table LAD/RAD test")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--lad", action="store_true")
    which.add_argument("--rad", action="store_true")
    p.add_argument("--show-table", action="store_true")
    p.add_argument("--expect", choices=["yes", "no"])
    p.add_argument("file")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("enumerate", parents=[common, search], help="list AG-groupoid classes of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--require")
    p.add_argument("--forbid")
    p.add_argument("--emit-tables", metavar="DIR")
    p.add_argument("--stats", action="store_true", help="search statistics on stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", parents=[common, search], help="class counts: total and non-associative RAD, LAD, AD")
    p.add_argument("--order", required=True, help="one order or a comma-separated list")
    p.add_argument("--stats", action="store_true", help="search statistics on stderr")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("implications", parents=[common, search], help="check the implication suite")
    p.add_argument("--max-order", type=int, default=4)
    p.set_defaults(func=cmd_implications)

    p = sub.add_parser("counterexample", parents=[common, search], help="first class separating identities")
    p.add_argument("--require", default="")
    p.add_argument("--forbid", default="")
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(func=cmd_counterexample)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("agkit: error: --jobs must be at least 1\n")
        return 2
    try:
        return args.func(args, out)
    except (UsageError, MagmaError) as exc:
        sys.stderr.write(f"agkit: error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"agkit: error: {exc}\n")
        return 2


run = main


def entry() -> None:
    sys.exit(main())
