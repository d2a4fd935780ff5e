"""``powersum`` command line: tables, exact evaluation, identity checks, benchmark."""

from __future__ import annotations

import argparse
import sys

from . import tables
from .errors import IdentityViolation
from .evaluate import STRATEGIES, bench, power_sum
from .exact_core import bernoulli_numbers, format_rational, genocchi
from .faulhaber import METHODS, companion_form, faulhaber, rfold
from .polynomial import SubstitutionBasis
from .verify import SUITES, format_report, run_suite

FORMATS = ("json", "csv", "latex")


def _format_arg(text: str) -> str:
    value = text.lower()
    if value not in FORMATS:
        raise argparse.ArgumentTypeError(f"format must be one of {', '.join(FORMATS)}")
    return value


def cmd_bernoulli(args) -> str:
    if args.max < 0:
        raise ValueError("--max must be >= 0")
    if args.genocchi:
        name, values = "genocchi", [genocchi(n) for n in range(args.max + 1)]
    else:
        name, values = "bernoulli", bernoulli_numbers(args.max)
    if args.format == "json":
        return tables.to_json({name: [format_rational(v) for v in values]})
    if args.format == "csv":
        return tables.to_csv(enumerate(values), header=("n", "value")).rstrip("\n")
    symbol = "\\mathbf{G}" if args.genocchi else "\\mathbf{B}"
    return "\n".join(
        tables.latex_row(f"{symbol}_{{{n}}}", tables.latex_rational(v)) for n, v in enumerate(values)
    )


def cmd_faulhaber(args) -> str:
    n = args.n
    if n < 2:
        raise ValueError("--n must be >= 2")
    basis = SubstitutionBasis(args.basis)
    if basis is SubstitutionBasis.OMEGA and n % 2 == 0:
        raise ValueError("omega basis requires odd n")
    F = faulhaber(n, args.method)
    if basis is SubstitutionBasis.Y:
        if args.format == "json":
            return tables.to_json({"basis": "y", "method": args.method, **F.to_json()})
        if args.format == "csv":
            return tables.to_csv((n, k, c) for k, c in enumerate(F.coeffs)).rstrip("\n")
        return tables.faulhaber_latex_row(F)
    form = companion_form(n, basis)
    if args.format == "json":
        return tables.to_json(
            {
                "n": n,
                "basis": basis.value,
                "half_factor": form.half_factor,
                "coeffs": form.poly.to_json(),
            }
        )
    if args.format == "csv":
        return tables.to_csv((n, k, c) for k, c in enumerate(form.poly.coeffs)).rstrip("\n")
    return tables.companion_latex_row(form)


def cmd_powersum(args) -> str:
    return str(power_sum(args.n, args.m, args.strategy, args.naive_limit))


def cmd_verify(args) -> tuple[str, int]:
    results = run_suite(args.suite, args.max)
    return format_report(results), 0 if all(r.ok for r in results) else 1


def cmd_rfold(args) -> str:
    res = rfold(args.n, args.r)
    if args.format == "json":
        return tables.to_json(res.to_json())
    if args.format == "csv":
        rows = [("sum", k, c) for k, c in enumerate(res.poly.coeffs)]
        rows += [("g", k, c) for k, c in enumerate(res.g.coeffs)]
        return tables.to_csv(rows, header=("part", "k", "value")).rstrip("\n")
    return "\n".join(
        [
            tables.latex_row(f"\\mathcal{{S}}_{{{res.n},{res.r}}}(x)", tables.latex_poly(res.poly, "x")),
            tables.latex_row(f"g_{{{res.n},{res.r}}}(v)", tables.latex_poly(res.g, "v")),
            tables.latex_row("d", str(res.d)),
        ]
    )


def cmd_bench(args) -> str:
    if args.n < 2:
        raise ValueError("--n must be >= 2")
    results = bench(args.n, args.m, args.reps)
    value = results[0].value
    lines = [f"S_{args.n}({args.m}) has {len(str(value))} digits; all strategies agree"]
    lines.append(f"{'strategy':<10} {'seconds':>12} {'mults':>10}")
    for r in results:
        lines.append(f"{r.strategy:<10} {r.seconds:>12.6f} {r.mults:>10}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powersum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="Bernoulli (or Genocchi) numbers")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--genocchi", action="store_true")
    p.add_argument("--format", type=_format_arg, default="csv")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("faulhaber", help="Faulhaber polynomial F_n or a rebased S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("auto",) + METHODS, default="auto")
    p.add_argument("--basis", choices=[b.value for b in SubstitutionBasis], default="y")
    p.add_argument("--format", type=_format_arg, default="json")
    p.set_defaults(func=cmd_faulhaber)

    p = sub.add_parser("powersum", help="exact 0^n + ... + (m-1)^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--strategy", choices=STRATEGIES + ("all",), default="faulhaber")
    p.add_argument("--naive-limit", type=int, default=None)
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max", type=int, default=13)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rfold", help="factor iterated power sums")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", type=_format_arg, default="json")
    p.set_defaults(func=cmd_rfold)

    p = sub.add_parser("bench", help="compare evaluation strategies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except IdentityViolation as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
