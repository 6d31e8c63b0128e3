"""Command-line front end.

    deghyp numbers   --kind degenerate-bernoulli --max 8
    deghyp series    --function tanh-half --order 8
    deghyp verify    --order 16 --x 1/2 --y 1/3
    deghyp integrate --measure volkenborn --prime 5 --levels 1,2,3,4 --integrand ff:n=1,lambda=0

Exit status: 0 success, 1 failed verification, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence, Union

from .hyperbolic import HYPERBOLIC_KINDS, HyperbolicSeries, hyperbolic_series
from .identities import DEFAULT_ORDER, MAX_ORDER, all_passed, run_all
from .padic import (FALLING, MAX_DEGREE, MEASURES, IntegrandSpec, PadicContext,
                    convergence_table)
from .ring import LambdaPoly, format_element, format_rational, lp_eval, parse_rational
from .special import KINDS, NumberTable, degenerate_exp_series, number_table

ORDER_ENV = "DEGHYP_ORDER"
MAX_LEVEL = 12
DEGENERATE_EXP = "degenerate-exp"
FORMATS = ("text", "json", "csv")


class IntegrandSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


# integrand grammar

class _Cursor:
    """Walks the non-blank characters of the input, remembering 1-based columns."""

    def __init__(self, text: str, start: int):
        self.chars = [(ch, i + 1) for i, ch in enumerate(text) if i >= start and not ch.isspace()]
        self.pos = 0
        self.end_column = len(text) + 1

    def peek(self) -> Optional[str]:
        return self.chars[self.pos][0] if self.pos < len(self.chars) else None

    @property
    def column(self) -> int:
        return self.chars[self.pos][1] if self.pos < len(self.chars) else self.end_column

    def take(self) -> str:
        ch = self.chars[self.pos][0]
        self.pos += 1
        return ch

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek()
            raise IntegrandSyntaxError(
                f"expected {ch!r}, found {'end of input' if found is None else repr(found)}",
                self.column)
        self.take()

    def integer(self) -> int:
        if self.peek() is None or not self.peek().isdigit():
            raise IntegrandSyntaxError("expected a digit", self.column)
        digits = ""
        while self.peek() is not None and self.peek().isdigit():
            digits += self.take()
        return int(digits)

    def rational(self) -> Fraction:
        sign = -1 if self.peek() == "-" else 1
        if self.peek() == "-":
            self.take()
        num = self.integer()
        den = 1
        if self.peek() == "/":
            self.take()
            den_col = self.column
            den = self.integer()
            if den == 0:
                raise IntegrandSyntaxError("zero denominator", den_col)
        return Fraction(sign * num, den)

    def done(self) -> bool:
        return self.pos >= len(self.chars)


def _parse_term(cur: _Cursor) -> tuple[Fraction, int, int]:
    col = cur.column
    coeff = Fraction(1)
    if cur.peek() is not None and cur.peek().isdigit():
        coeff = cur.rational()
        if cur.peek() != "*":
            return coeff, 0, col
        cur.take()
    if cur.peek() != "x":
        raise IntegrandSyntaxError("expected a coefficient or 'x'", cur.column)
    cur.take()
    degree = 1
    if cur.peek() == "^":
        cur.take()
        deg_col = cur.column
        degree = cur.integer()
        if degree > MAX_DEGREE:
            raise IntegrandSyntaxError(f"degree {degree} exceeds the cap of {MAX_DEGREE}",
                                       deg_col)
    return coeff, degree, col


def parse_integrand(text: str) -> IntegrandSpec:
    """Parse ``poly:<terms>`` or ``ff:n=<int>[,lambda=<rational>]``.

    Whitespace is ignored; syntax errors carry the 1-based column.
    """
    stripped = text.lstrip()
    offset = len(text) - len(stripped)
    if stripped.startswith("poly:"):
        cur = _Cursor(text, offset + len("poly:"))
        terms = []
        sign = 1
        if cur.peek() in ("+", "-"):
            sign = -1 if cur.take() == "-" else 1
        while True:
            c, k, _ = _parse_term(cur)
            terms.append((sign * c, k))
            if cur.done():
                break
            if cur.peek() not in ("+", "-"):
                raise IntegrandSyntaxError(f"unexpected {cur.peek()!r}", cur.column)
            sign = -1 if cur.take() == "-" else 1
        return IntegrandSpec.monomials(terms)
    if stripped.startswith("ff:"):
        cur = _Cursor(text, offset + len("ff:"))
        for ch in "n=":
            cur.expect(ch)
        n_col = cur.column
        n = cur.integer()
        if n > MAX_DEGREE:
            raise IntegrandSyntaxError(f"degree {n} exceeds the cap of {MAX_DEGREE}", n_col)
        lam = Fraction(1)
        if not cur.done():
            for ch in ",lambda=":
                cur.expect(ch)
            lam = cur.rational()
        if not cur.done():
            raise IntegrandSyntaxError(f"unexpected {cur.peek()!r}", cur.column)
        return IntegrandSpec.falling(n, lam)
    raise IntegrandSyntaxError("integrand must start with 'poly:' or 'ff:'", offset + 1)


def render_integrand(spec: IntegrandSpec) -> str:
    if spec.basis == FALLING:
        return f"ff:n={spec.n},lambda={format_rational(spec.lam)}"
    if not spec.terms:
        return "poly:0"
    out = []
    for i, (c, k) in enumerate(spec.terms):
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        sign = "-" if c < 0 else ("+" if i else "")
        out.append(sign + body)
    return "poly:" + "".join(out)


# argument types

def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _lambda_arg(text: str) -> Union[str, Fraction]:
    return "symbolic" if text == "symbolic" else _rational_arg(text)


def _order_arg(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}")
    if not 0 <= k <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must lie in 0..{MAX_ORDER}")
    return k


def _levels_arg(text: str) -> list[int]:
    try:
        levels = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"levels must be comma-separated integers: {text!r}")
    if any(N < 1 or N > MAX_LEVEL for N in levels):
        raise argparse.ArgumentTypeError(f"levels must lie in 1..{MAX_LEVEL}")
    if any(a >= b for a, b in zip(levels, levels[1:])):
        raise argparse.ArgumentTypeError("levels must be strictly ascending")
    return levels


def _prime_arg(text: str) -> int:
    try:
        ctx = PadicContext(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an odd prime, got {text!r}")
    return ctx.p


def _default_order() -> int:
    env = os.environ.get(ORDER_ENV)
    if env is None:
        return DEFAULT_ORDER
    try:
        return _order_arg(env)
    except argparse.ArgumentTypeError as exc:
        raise ValueError(f"{ORDER_ENV}: {exc}")


def _usage_error(message: str) -> int:
    print(f"deghyp: error: {message}", file=sys.stderr)
    return 2


def build_parser(default_order: int = DEFAULT_ORDER) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deghyp",
        description="Degenerate Bernoulli/Euler numbers, degenerate hyperbolic series and "
                    "finite-level p-adic integrals, in exact arithmetic.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", parents=[common], help="print a special-number table")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--max", type=_order_arg, default=default_order, dest="order")
    p.add_argument("--lambda", type=_lambda_arg, default="symbolic", dest="lam",
                   help="'symbolic' (default) or a rational value to substitute")

    p = sub.add_parser("series", parents=[common], help="print EGF coefficients of a series in a")
    p.add_argument("--function", choices=HYPERBOLIC_KINDS + (DEGENERATE_EXP,), required=True)
    p.add_argument("--x", type=_rational_arg, default=Fraction(1, 2))
    p.add_argument("--order", type=_order_arg, default=default_order)
    p.add_argument("--lambda", type=_lambda_arg, default="symbolic", dest="lam")

    p = sub.add_parser("verify", parents=[common], help="run every identity check")
    p.add_argument("--order", type=_order_arg, default=default_order)
    p.add_argument("--x", type=_rational_arg, default=Fraction(1, 2))
    p.add_argument("--y", type=_rational_arg, default=Fraction(1, 3))

    p = sub.add_parser("integrate", parents=[common],
                       help="finite-level p-adic sums against the exact integral")
    p.add_argument("--measure", choices=MEASURES + ("both",), default="both")
    p.add_argument("--prime", type=_prime_arg, required=True)
    p.add_argument("--levels", type=_levels_arg, required=True)
    p.add_argument("--integrand", required=True,
                   help="poly:<terms in x> or ff:n=<int>[,lambda=<rational>]")
    p.add_argument("--precision", type=int, default=20)
    return parser


# rendering

def _evaluate(value, lam):
    if lam == "symbolic" or not isinstance(value, LambdaPoly):
        return value
    return lp_eval(value, lam)


def _csv(rows: Sequence[Sequence], quote_all: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n",
                        quoting=csv.QUOTE_NONNUMERIC if quote_all else csv.QUOTE_MINIMAL)
    writer.writerows(rows)
    return buf.getvalue()


def _render_numbers(table: NumberTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table.to_json(), indent=2) + "\n"
    values = [format_element(v) for v in table.values]
    if fmt == "csv":
        poly = any(isinstance(v, LambdaPoly) for v in table.values)
        return "n,value\n" + _csv([[n, v] for n, v in enumerate(values)], poly)
    width = len(str(table.max_index))
    return "".join(f"{n:>{width}}  {v}\n" for n, v in enumerate(values))


def _render_series(hs: HyperbolicSeries, fmt: str, lam) -> str:
    egf = [_evaluate(c, lam) for c in hs.egf_coefficients()]
    if fmt == "json":
        out = hs.to_json()
        out["egf_coefficients"] = [format_element(c) for c in egf]
        return json.dumps(out, indent=2) + "\n"
    if fmt == "csv":
        poly = any(isinstance(c, LambdaPoly) for c in egf)
        return "n,egf_coefficient\n" + _csv([[n, format_element(c)] for n, c in enumerate(egf)],
                                            poly)
    width = len(str(hs.order))
    head = f"# {hs.kind}" + ("" if hs.x is None else f" x={format_rational(hs.x)}")
    return head + "\n" + "".join(f"{n:>{width}}  {format_element(c)}\n"
                                 for n, c in enumerate(egf))


def _cmd_numbers(args) -> tuple[int, str]:
    table = number_table(args.kind, args.order)
    if args.lam != "symbolic":
        table = table.at(args.lam)
    return 0, _render_numbers(table, args.format)


def _cmd_series(args) -> tuple[int, str]:
    if args.function == DEGENERATE_EXP:
        s = degenerate_exp_series(args.x, args.order)
        hs = HyperbolicSeries(DEGENERATE_EXP, args.x, args.order, s)
    else:
        hs = hyperbolic_series(args.function, args.order, args.x)
    return 0, _render_series(hs, args.format, args.lam)


def _cmd_verify(args) -> tuple[int, str]:
    reports = run_all(args.order, [(args.x, args.y)])
    status = 0 if all_passed(reports) else 1
    if args.format == "json":
        return status, json.dumps([r.to_json() for r in reports], indent=2) + "\n"
    if args.format == "csv":
        rows = [[r.name, r.order, r.passed, "" if r.first_failure_index is None
                 else r.first_failure_index, d["lhs_coeff"] or "", d["rhs_coeff"] or ""]
                for r, d in ((r, r.to_json()) for r in reports)]
        header = "name,order,passed,first_failure_index,lhs_coeff,rhs_coeff\n"
        return status, header + _csv(rows, False)
    passed = sum(r.passed for r in reports)
    lines = [r.describe() for r in reports]
    lines.append(f"{passed}/{len(reports)} checks passed")
    return status, "\n".join(lines) + "\n"


def _cmd_integrate(args) -> tuple[int, str]:
    spec = parse_integrand(args.integrand)
    ctx = PadicContext(args.prime, args.precision)
    measures = MEASURES if args.measure == "both" else (args.measure,)
    tables = [convergence_table(spec, ctx, args.levels, m) for m in measures]
    label = render_integrand(spec)
    if args.format == "json":
        docs = []
        for t in tables:
            doc = t.to_json()
            doc["integrand"] = label
            docs.append(doc)
        payload = docs[0] if len(docs) == 1 else docs
        return 0, json.dumps(payload, indent=2) + "\n"
    if args.format == "csv":
        rows = [[t.measure, r.N, format_rational(r.value), d["distance"]]
                for t in tables for r, d in zip(t.rows, t.to_json()["rows"])]
        return 0, "measure,N,sum,distance\n" + _csv(rows, False)
    out = []
    for t in tables:
        out.append(f"# {t.measure} integral of {label} at p={t.p}, "
                   f"exact value {format_rational(t.exact)}")
        out.append("N\tsum\tdistance")
        for r, d in zip(t.rows, t.to_json()["rows"]):
            out.append(f"{r.N}\t{d['sum']}\t{d['distance']}")
    return 0, "\n".join(out) + "\n"


COMMANDS = {
    "numbers": _cmd_numbers,
    "series": _cmd_series,
    "verify": _cmd_verify,
    "integrate": _cmd_integrate,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """Run one command; returns ``(exit status, stdout text)``."""
    try:
        parser = build_parser(_default_order())
    except ValueError as exc:
        return _usage_error(str(exc)), ""
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        return _usage_error(str(exc)), ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, out = run_cli(argv)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
