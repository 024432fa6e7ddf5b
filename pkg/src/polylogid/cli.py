"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import re
import sys
from typing import Sequence

from . import arithdata, eulerian, identity, lowerorder, satake
from .errors import PolylogIdError
from .exactmath import Polynomial, format_poly, rf_series

FORMATS = ("text", "csv", "latex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        print(f"hint: run '{self.prog} --help' for the accepted flags", file=sys.stderr)
        raise SystemExit(2)


def _csv_text(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _latex_rows(rows: Sequence[Sequence[object]], spec: str | None = None) -> str:
    width = max(len(r) for r in rows)
    lines = [rf"\begin{{tabular}}{{{spec or 'r' * width}}}"]
    lines += [" & ".join(str(c) for c in row) + r" \\" for row in rows]
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"--range expects A..B, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"--range {text}: empty range")
    return range(lo, hi + 1)


def cmd_eulerian(args) -> int:
    row = eulerian.eulerian_row(args.r).values
    if args.format == "text":
        print(" ".join(map(str, row)))
    elif args.format == "csv":
        sys.stdout.write(_csv_text([["j", "E"]] + [[j, e] for j, e in enumerate(row)]))
    else:
        sys.stdout.write(_latex_rows([row]))
    return 0


def cmd_polylog(args) -> int:
    f = eulerian.polylog_closed(args.r)
    num, n = f.one_minus_x_form()
    series = rf_series(f, args.series) if args.series is not None else None
    if args.format == "text":
        print(f"Li_{{-{args.r}}}(x) = {f}")
        if series is not None:
            print(f"series: {format_poly(Polynomial(series.coeffs), ascending=True)} + O(x^{args.series + 1})")
    elif args.format == "csv":
        rows: list[list[object]] = [["section", "index", "value"]]
        rows += [["numerator", i, c] for i, c in enumerate(num.coeffs)]
        rows.append(["denominator_power", "", n])
        if series is not None:
            rows += [["series", k, c] for k, c in enumerate(series.coeffs)]
        sys.stdout.write(_csv_text(rows))
    else:
        print(rf"\mathrm{{Li}}_{{-{args.r}}}(x) = \frac{{{_latex_poly(num)}}}{{(1-x)^{{{n}}}}}")
        if series is not None:
            print(_latex_poly(Polynomial(series.coeffs), ascending=True) + rf" + O(x^{{{args.series + 1}}})")
    return 0


def _latex_poly(p: Polynomial, ascending: bool = False) -> str:
    # x^12 must be x^{12} in LaTeX
    return re.sub(r"\^(\d+)", r"^{\1}", format_poly(p, ascending=ascending)).replace(" ", "")


def cmd_verify(args) -> int:
    if args.r is None and not args.range:
        raise UsageError("verify needs --r R or --range A..B")
    rs = _parse_range(args.range) if args.range else [args.r]
    corrupt = args.corrupt_c
    ctx = identity.corrupted_c_constant(corrupt) if corrupt is not None else contextlib.nullcontext()
    with ctx:
        for r in rs:
            rep = identity.verify_identity(r, args.series_order)
            if rep.passed:
                print(f"PASS r={r} (structural + series)")
            else:
                print(f"FAIL r={r} (structural={rep.structural} series={rep.series})")
                print(f"verification failed at r={r}", file=sys.stderr)
                return 1
    return 0


def cmd_cmr(args) -> int:
    table = satake.CoefficientTable.build(args.max_m)
    rows = table.nonzero()
    if args.format == "text":
        for m in range(1, args.max_m + 1):
            terms = " ".join(f"{c:+d}*l^{r}" for mm, r, c in rows if mm == m)
            print(f"m={m}: {terms}")
    elif args.format == "csv":
        sys.stdout.write(_csv_text([["m", "r", "c"]] + [list(t) for t in rows]))
    else:
        sys.stdout.write(_latex_rows([["m", "r", "c_{m,r}"]] + [list(t) for t in rows]))
    return 0


def _load_model(spec: str, lmax: int) -> lowerorder.MomentModel:
    if spec == "sato-tate":
        return lowerorder.sato_tate_model(lmax)
    if spec.startswith("file:"):
        return lowerorder.load_moment_model(spec[5:])
    raise UsageError(f"--model must be 'sato-tate' or 'file:PATH', got {spec!r}")


def cmd_lower_order(args) -> int:
    model = _load_model(args.model, args.lmax)
    res = lowerorder.lower_order_sum(model, args.log_r, args.phi0, args.cutoff)
    fields = [
        ("value", repr(res.value)),
        ("prime_cutoff", res.prime_cutoff),
        ("log_R", res.log_R),
        ("phi_hat_zero", res.phi_hat_zero),
        ("tail_estimate", repr(res.tail_estimate)),
    ]
    if args.format == "csv":
        sys.stdout.write(_csv_text([[k for k, _ in fields], [v for _, v in fields]]))
    else:
        for k, v in fields:
            print(f"{k}={v}")
    return 0


def _open_family(path: str) -> arithdata.FamilyData:
    if path == "-":
        return arithdata.load_family(sys.stdin.buffer)
    try:
        with open(path, "rb") as fh:
            return arithdata.load_family(fh)
    except OSError as exc:
        raise UsageError(f"--input: cannot read {path}: {exc.strerror}") from None


def cmd_moments(args) -> int:
    fam = _open_family(args.input)
    print(repr(arithdata.empirical_moment(fam, args.r, args.p)))
    return 0


def cmd_empirical(args) -> int:
    fam = _open_family(args.input)
    print(repr(lowerorder.empirical_lower_order(fam, args.log_r, args.phi0, args.rmax)))
    return 0


def cmd_ap(args) -> int:
    curve = arithdata.EllipticCurve(args.a, args.b)
    s, lam = arithdata.elliptic_lambda(curve, args.p, negate=args.negate)
    if args.format == "csv":
        sys.stdout.write(_csv_text([["A", "B", "p", "S", "lambda"], [args.a, args.b, args.p, s, repr(lam)]]))
    else:
        print(f"S={s} lambda={lam!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polylogid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("eulerian", help="row of Eulerian numbers E(r, 0..r)")
    p.add_argument("--r", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_eulerian)

    p = sub.add_parser("polylog", help="closed form of Li_{-r}(x)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--series", type=int, metavar="N")
    fmt(p)
    p.set_defaults(func=cmd_polylog)

    p = sub.add_parser("verify", help="check the polylogarithm identity exactly")
    p.add_argument("--r", type=int)
    p.add_argument("--range", metavar="A..B")
    p.add_argument("--series-order", type=int, default=60)
    p.add_argument("--corrupt-c", type=int, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cmr", help="table of c_{m,r}")
    p.add_argument("--max-m", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_cmr)

    p = sub.add_parser("lower-order", help="lower-order prime sum from a moment model")
    p.add_argument("--model", required=True, help="sato-tate or file:PATH (CSV ell,M)")
    p.add_argument("--log-r", type=float, required=True)
    p.add_argument("--phi0", type=float, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--lmax", type=int, default=20)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_lower_order)

    p = sub.add_parser("moments", help="empirical weighted moment A_r(p)")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("empirical-lower-order", help="data-driven r >= 3 prime sum")
    p.add_argument("--input", required=True)
    p.add_argument("--log-r", type=float, required=True)
    p.add_argument("--phi0", type=float, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.set_defaults(func=cmd_empirical)

    p = sub.add_parser("ap", help="elliptic-curve S(p) and lambda(p)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--negate", action="store_true", help="use lambda = -S/sqrt(p)")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_ap)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"polylogid {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (PolylogIdError, ValueError) as exc:
        print(f"polylogid {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
