"""Command-line front end.

    bernstir stirling --kind 2 --N 4 --K 3 --r 2
    bernstir bernoulli --family B --n 2 --alpha 1 --x 0 --route both
    bernstir verify c5-first --sign paper --max-n 2
    bernstir table genocchi --max 6 --format csv

Exit codes: 0 success (or identity verified), 1 identity falsified,
2 usage error, 3 pole hit by a Melzak sum.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import bernoulli as B
from . import identities as I
from .rstirling import StirlingKind, rstir, table as stirling_table
from .series import SeriesError

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_POLE = 3

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(Exception):
    pass


# -- encoding ----------------------------------------------------------------

def rational_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_text(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def parse_rational(text: str) -> Fraction:
    """``a/b`` with optional sign; ``/1`` may be left out."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected a rational 'a/b', got {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise argparse.ArgumentTypeError("zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")


def offsets(text: str) -> tuple[int, ...]:
    try:
        values = tuple(natural(t) for t in text.split(",") if t.strip())
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(f"expected comma-separated naturals, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("need at least one p offset")
    return values


def report_json(rep: I.IdentityReport) -> dict:
    return {
        "id": rep.id.value,
        "sign": rep.sign,
        "grid": rep.grid,
        "checked": rep.checked,
        "failed": rep.failed,
        "verified": rep.verified,
        "failures": [
            {
                "params": {k: (rational_json(v) if isinstance(v, Fraction) else v)
                           for k, v in f.params.items()},
                "lhs": rational_json(f.lhs),
                "rhs": rational_json(f.rhs),
            }
            for f in rep.failures
        ],
    }


def _emit(fmt: str, command: str, params: dict, result: Any,
          header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    if fmt == "json":
        doc = {"command": command, "params": params, "result": result}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(c) for c in row])
    return buf.getvalue()


def _cell(c) -> str:
    if isinstance(c, bool):
        return "true" if c else "false"
    if isinstance(c, Fraction):
        return rational_text(c)
    if c is None:
        return ""
    return str(c)


# -- commands ----------------------------------------------------------------

def cmd_stirling(args) -> tuple[str, int]:
    kind = StirlingKind.parse(args.kind)
    if args.table is not None:
        t = stirling_table(kind, args.r)
        rows = [t.row(N) for N in range(args.table + 1)]
        params = {"kind": kind.value, "r": args.r, "table": args.table}
        result = [[str(v) for v in row] for row in rows]
        flat = [(N, K, v) for N, row in enumerate(rows) for K, v in enumerate(row)]
        return _emit(args.format, "stirling", params, result, ("N", "K", "value"), flat), EXIT_OK
    if args.N is None or args.K is None:
        raise UsageError("stirling needs --N and --K (or --table MAXN)")
    value = rstir(kind, args.N, args.K, args.r)
    params = {"kind": kind.value, "N": args.N, "K": args.K, "r": args.r}
    out = _emit(args.format, "stirling", params, str(value),
                ("kind", "N", "K", "r", "value"), [(kind.value, args.N, args.K, args.r, value)])
    return out, EXIT_OK


def cmd_bernoulli(args) -> tuple[str, int]:
    family = B.Family.parse(args.family)
    if args.p is not None and args.p < args.n:
        raise UsageError(f"--p must be >= n ({args.n})")
    params = {"family": family.value, "n": args.n, "alpha": rational_json(args.alpha),
              "x": args.x, "p": args.p, "q": args.q, "route": args.route}

    def closed():
        return B.evaluate(family, args.n, args.alpha, args.x, args.p, args.q,
                          retry_poles=args.auto_q)

    if args.route == "closed":
        value = closed()
        result = rational_json(value)
        row = (family.value, args.n, args.alpha, args.x, value)
        header = ("family", "n", "alpha", "x", "value")
    elif args.route == "oracle":
        value = B.oracle_eval(family, args.n, args.alpha, args.x)
        result = rational_json(value)
        row = (family.value, args.n, args.alpha, args.x, value)
        header = ("family", "n", "alpha", "x", "value")
    else:
        c, o = closed(), B.oracle_eval(family, args.n, args.alpha, args.x)
        result = {"closed": rational_json(c), "oracle": rational_json(o), "agree": c == o}
        row = (family.value, args.n, args.alpha, args.x, c, o, c == o)
        header = ("family", "n", "alpha", "x", "closed", "oracle", "agree")
    return _emit(args.format, "bernoulli", params, result, header, [row]), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    grid = I.Grid(args.max_n, args.max_k, args.max_r, args.max_q, args.p_offsets)
    if args.identity == "all":
        reports = I.run_all(grid, args.sign)
    else:
        reports = [I.run_identity(args.identity, grid, args.sign)]
    params = {"identity": args.identity, "max_n": args.max_n, "max_k": args.max_k,
              "max_r": args.max_r, "max_q": args.max_q,
              "p_offsets": list(args.p_offsets), "sign": args.sign}
    docs = [report_json(r) for r in reports]
    result = docs if args.identity == "all" else docs[0]
    rows = []
    for rep in reports:
        if not rep.failures:
            rows.append((rep.id.value, rep.sign, rep.checked, rep.failed, "", "", ""))
        for f in rep.failures:
            witness = " ".join(f"{k}={v}" for k, v in f.params.items())
            rows.append((rep.id.value, rep.sign, rep.checked, rep.failed, witness, f.lhs, f.rhs))
    out = _emit(args.format, "verify", params, result,
                ("identity", "sign", "checked", "failed", "witness", "lhs", "rhs"), rows)
    code = EXIT_OK if all(r.verified for r in reports) else EXIT_FALSIFIED
    return out, code


def cmd_table(args) -> tuple[str, int]:
    if args.kind == "genocchi":
        top = 6 if args.max is None else args.max
        rows = []
        for n in range(1, top + 1):
            prod, first, second = B.genocchi_routes(n)
            rows.append((n, prod, first, second, prod == first == second))
        header = ("n", "product", "stirling_first", "stirling_second", "agree")
        params = {"kind": args.kind, "max": top}
    elif args.kind == "bernoulli-numbers":
        top = 12 if args.max is None else args.max
        family = B.Family.parse(args.family)
        rows = []
        for n in range(top + 1):
            series = B.oracle_eval(family, n, 1, 0)
            if family is B.Family.FIRST:
                closed = B.classical_B_at_int(n, 0)
                reps = B.bernoulli_number_reps(n)
                a, b = reps["B_first"], reps["B_second"]
            else:
                closed = B.classical_b_at_int(n, 0)
                reps = B.bernoulli_number_reps(n)
                a, b = reps["b_first"], reps["b_second"]
            rows.append((n, series, closed, a, b, series == closed == a == b))
        header = ("n", "series", "closed", "stirling_first", "stirling_second", "agree")
        params = {"kind": args.kind, "family": family.value, "max": top}
    else:
        n = 1 if args.n is None else args.n
        if n < 1:
            raise UsageError("euler-even needs --n >= 1")
        m_max = 4 if args.m_max is None else args.m_max
        rows = []
        for m in range(0, m_max + 1, 2):
            via_bernoulli = B.euler_at_even(n, m)
            series = B.euler_poly_oracle(n - 1, m)
            rows.append((m, via_bernoulli, series, via_bernoulli == series))
        header = ("m", "via_bernoulli", "series", "agree")
        params = {"kind": args.kind, "n": n, "m_max": m_max}

    result = [
        {h: (rational_json(v) if isinstance(v, Fraction) else v) for h, v in zip(header, row)}
        for row in rows
    ]
    return _emit(args.format, "table", params, result, header, rows), EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(
        prog="bernstir",
        description="Exact r-Stirling numbers and higher-order Bernoulli values.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", parents=[common], help="r-Stirling numbers")
    p.add_argument("--kind", choices=("1", "2"), required=True)
    p.add_argument("--N", type=natural)
    p.add_argument("--K", type=natural)
    p.add_argument("--r", type=natural, default=0)
    p.add_argument("--table", type=natural, metavar="MAXN",
                   help="print rows N = 0..MAXN instead of one value")
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("bernoulli", parents=[common],
                       help="B_n^(alpha)(x) or b_n^(alpha)(x) at an integer x")
    p.add_argument("--family", choices=("B", "b"), required=True)
    p.add_argument("--n", type=natural, required=True)
    p.add_argument("--alpha", type=parse_rational, required=True)
    p.add_argument("--x", type=integer, required=True)
    p.add_argument("--p", type=natural)
    p.add_argument("--q", type=natural)
    p.add_argument("--route", choices=("closed", "oracle", "both"), default="closed")
    p.add_argument("--auto-q", action="store_true",
                   help="on a pole, raise q until the sample points avoid it")
    # let "--alpha -1/2" parse as a value rather than an option
    p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("verify", parents=[common], help="sweep an identity over a grid")
    p.add_argument("identity", nargs="?", default="all",
                   choices=["all"] + [i.value for i in I.IdentityId])
    p.add_argument("--max-n", type=natural, default=8)
    p.add_argument("--max-k", type=natural, default=4)
    p.add_argument("--max-r", type=natural, default=3)
    p.add_argument("--max-q", type=natural, default=3)
    p.add_argument("--p-offsets", type=offsets, default=(0, 2))
    p.add_argument("--sign", choices=I.SIGNS, default="corrected")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common],
                       help="Genocchi numbers, Bernoulli numbers, Euler values at even m")
    p.add_argument("kind", choices=("genocchi", "bernoulli-numbers", "euler-even"))
    p.add_argument("--max", type=natural)
    p.add_argument("--family", choices=("B", "b"), default="B")
    p.add_argument("--n", type=natural)
    p.add_argument("--m-max", type=natural)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on malformed input
    try:
        out, code = args.func(args)
    except UsageError as e:
        parser.error(str(e))
    except B.PoleAtSampledPoint as e:
        print(f"bernstir: {e}", file=sys.stderr)
        return EXIT_POLE
    except (SeriesError, B.NonIntegerArgument) as e:
        print(f"bernstir: {e}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
