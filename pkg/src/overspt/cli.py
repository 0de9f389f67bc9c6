"""Command-line entry point: ``overspt {verify,table,oracle,crosscheck}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional

from . import genfun
from .enumeration import CountFunction, count, members
from .verify import (
    DEFAULT_KMAX,
    DEFAULT_ORACLE_BOUND,
    DEFAULT_ORDER,
    IdentityId,
    VerificationReport,
    crosscheck_all,
    series_for,
    verify_all,
)

FORMATS = ("text", "json", "csv")

_RECURRENCES = {
    "PBAR_K": genfun.pbar_recurrence,
    "VBAR_K": genfun.vbar_recurrence,
    "WBAR_K": genfun.wbar_recurrence,
    "TBAR_K": genfun.tbar_recurrence,
}
TABLE_NAMES = [f.value for f in CountFunction] + list(_RECURRENCES)


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %d" % v)
    return v


def _parse_ids(raw: List[str]) -> Optional[List[IdentityId]]:
    names = [x for chunk in raw for x in chunk.replace(",", " ").split()]
    if not names or any(x.lower() == "all" for x in names):
        return None
    out = []
    for x in names:
        try:
            out.append(IdentityId(x.upper()))
        except ValueError:
            raise UsageError("unknown identity %r (choose from %s or all)"
                             % (x, ", ".join(i.value for i in IdentityId)))
    return out


def _emit_reports(reports: List[VerificationReport], fmt: str, out) -> None:
    if fmt == "json":
        json.dump([r.to_dict() for r in reports], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["identity", "k", "order", "passed", "mismatch_index", "lhs", "rhs",
                    "elapsed_ms", "detail"])
        for r in reports:
            d = r.to_dict()
            fm = d["first_mismatch"] or {"index": "", "lhs": "", "rhs": ""}
            w.writerow([d["identity"], "" if r.k is None else r.k, r.order, r.passed,
                        fm["index"], fm["lhs"], fm["rhs"], d["elapsed_ms"], r.detail or ""])
    else:
        for r in reports:
            line = "%s %-24s k=%-4s order=%d" % ("PASS" if r.passed else "FAIL", r.identity.value,
                                                 "-" if r.k is None else r.k, r.order)
            if r.first_mismatch:
                i, a, b = r.first_mismatch
                line += "  first mismatch at q^%d: lhs=%d rhs=%d" % (i, a, b)
            if r.detail:
                line += "  [%s]" % r.detail
            line += "  (%.1f ms)" % (r.elapsed * 1000)
            out.write(line + "\n")
        failed = sum(not r.passed for r in reports)
        out.write("%d checks, %d passed, %d failed\n" % (len(reports), len(reports) - failed, failed))


def cmd_verify(args, out) -> int:
    if args.order < 4:
        raise UsageError("--order must be at least 4")
    ids = _parse_ids(args.ids)
    reports = verify_all(args.kmax, args.order, args.oracle_bound, ids=ids)
    _emit_reports(reports, args.format, out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_table(args, out) -> int:
    name = args.function.upper()
    if name in _RECURRENCES:
        s = _RECURRENCES[name](args.k, args.nmax)
    else:
        try:
            fn = CountFunction(name)
        except ValueError:
            raise UsageError("unknown function %r (choose from %s)" % (args.function, ", ".join(TABLE_NAMES)))
        s = series_for(fn, args.k, args.nmax)
    rows = list(enumerate(s.coeffs))
    if args.format == "json":
        json.dump({"function": name, "k": args.k, "rows": [{"n": n, "coeff": c} for n, c in rows]},
                  out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "coeff"])
        w.writerows(rows)
    else:
        width = max(len(str(c)) for _, c in rows)
        for n, c in rows:
            out.write("%4d  %*d\n" % (n, width, c))
    return 0


def _member_key(p):
    return [(v, not o) for v, o in p.expanded()]


def cmd_oracle(args, out) -> int:
    try:
        fn = CountFunction(args.function.upper())
    except ValueError:
        raise UsageError("unknown function %r" % args.function)
    if args.n > args.oracle_bound:
        raise UsageError("n=%d exceeds the oracle bound %d (raise --oracle-bound)" % (args.n, args.oracle_bound))
    k = args.k if fn.uses_k else None
    total = count(fn, args.k, args.n)
    listed = sorted(members(fn, args.k, args.n), key=_member_key, reverse=True) if args.list else []
    if args.format == "json":
        doc = {"function": fn.value, "k": k, "n": args.n, "count": total}
        if args.list:
            doc["members"] = [[{"value": v, "overlined": o} for v, o in p.expanded()] for p in listed]
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["function", "k", "n", "count"])
        w.writerow([fn.value, "" if k is None else k, args.n, total])
        if args.list:
            w.writerow(["member"])
            w.writerows([p.render()] for p in listed)
    else:
        label = fn.value if k is None else "%s k=%d" % (fn.value, k)
        out.write("%s n=%d: %d\n" % (label, args.n, total))
        for p in listed:
            out.write("  %s\n" % p.render())
    return 0


def cmd_crosscheck(args, out) -> int:
    if args.nmax > args.oracle_bound:
        raise UsageError("--nmax %d exceeds the oracle bound %d" % (args.nmax, args.oracle_bound))
    if args.order < 4:
        raise UsageError("--order must be at least 4")
    reports = crosscheck_all(args.kmax, args.order, args.nmax)
    _emit_reports(reports, args.format, out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overspt",
        description="Exact q-series checks for overpartitions with a repeated smallest non-overlined part.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, order=True, kmax=False, fmt=True):
        if order:
            p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order (default 80)")
        if kmax:
            p.add_argument("--kmax", type=_positive, default=DEFAULT_KMAX, help="largest k (default 8)")
        p.add_argument("--oracle-bound", type=int, default=DEFAULT_ORACLE_BOUND,
                       help="largest n handed to brute-force enumeration (default 24)")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("ids", nargs="*", default=["all"], help="identity ids, or 'all'")
    common(p, kmax=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print series coefficients n=0..nmax")
    p.add_argument("function", help="count function or one of %s" % ", ".join(_RECURRENCES))
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--nmax", type=_positive, default=20)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", help="brute-force count, optionally listing the overpartitions")
    p.add_argument("function")
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print the counted overpartitions")
    common(p, order=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("crosscheck", help="series coefficients against brute-force counts")
    p.add_argument("--nmax", type=_positive, default=DEFAULT_ORACLE_BOUND)
    common(p, kmax=True)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print("overspt %s: error: %s" % (args.command, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
