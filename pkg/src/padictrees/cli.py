"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 invalid prime, 4 engine/input
mismatch, 5 trees disagree (``diff``).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .analytic import NotFactorableError, build_analytic_tree, build_partial_tree
from .core import INF, InvalidPrimeError, Prime, valuation_rat
from .empirical import build_empirical_tree
from .expansion import digits_from_zero, expand, is_padic_integer
from .parser import ParseError, parse, parse_polynomial
from .polynomial import ZeroPolynomialError
from .render import RenderConfig, TreeDocument, render
from .roots import ResourceLimitError, zp_root_prefixes
from .tree import diff_trees

EXIT_PARSE = 2
EXIT_PRIME = 3
EXIT_MISMATCH = 4
EXIT_DIFF = 5

ENGINES = ("auto", "analytic", "empirical", "partial")


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _prime(p: int) -> Prime:
    try:
        return Prime(p)
    except InvalidPrimeError as exc:
        raise _CliError(str(exc), EXIT_PRIME) from None


def _fmt_digits(digits) -> str:
    return "[" + ", ".join(map(str, digits)) + "]"


def cmd_val(args) -> str:
    p = _prime(args.p)
    f = parse_polynomial(args.expr)
    v = valuation_rat(f(args.at), p)
    return "inf" if v is INF else str(v)


def cmd_expand(args) -> str:
    p = _prime(args.p)
    try:
        r = Fraction(args.rational.strip())
    except (ValueError, ZeroDivisionError):
        raise _CliError(f"not a rational number: {args.rational!r}", EXIT_PARSE) from None
    if args.digits < 1:
        raise _CliError("--digits must be positive", EXIT_PARSE)
    return str(expand(r, p, args.digits))


def _build(f, p, engine: str, cfg: RenderConfig, root_depth: int | None):
    if engine == "auto":
        engine = "analytic" if f.is_completely_factored() else "partial"
    if engine == "analytic":
        return build_analytic_tree(f, p, cfg.depth)
    if engine == "partial":
        return build_partial_tree(f, p, cfg.depth, root_depth, cfg.max_extra_depth)
    return build_empirical_tree(f, p, cfg.depth, cfg.max_extra_depth)


def cmd_tree(args) -> str:
    p = _prime(args.p)
    cfg = RenderConfig(args.format, args.depth, not args.no_labels, args.extra_depth)
    f = parse(args.expr)
    tree = _build(f, p, args.engine, cfg, args.root_depth)
    return render(TreeDocument.from_tree(tree), cfg.format, cfg.show_branch_labels).rstrip("\n")


def cmd_diff(args) -> tuple[str, int]:
    p = _prime(args.p)
    f = parse(args.expr)
    analytic = build_analytic_tree(f, p, args.depth)
    empirical = build_empirical_tree(f, p, args.depth, args.extra_depth)
    result = diff_trees(analytic, empirical)
    lines = [f"{len(result.disagreements)} disagreements"]
    for node, s1, s2 in result.disagreements:
        lines.append(f"  node {_fmt_digits(node)} (label {analytic.label(node)}): analytic {s1} vs empirical {s2}")
    if result.incomparable:
        lines.append(f"{len(result.incomparable)} incomparable (unresolved)")
        for node, s1, s2 in result.incomparable:
            lines.append(f"  node {_fmt_digits(node)} (label {analytic.label(node)}): analytic {s1} vs empirical {s2}")
    return "\n".join(lines), (EXIT_DIFF if result.disagreements else 0)


def cmd_roots(args) -> str:
    p = _prime(args.p)
    f = parse(args.expr)
    if f.is_zero():
        raise ZeroPolynomialError("every number is a root of the zero polynomial")
    lines = []
    counts: dict = {}
    for lf in f.linear_factors:
        counts[lf.root()] = counts.get(lf.root(), 0) + 1
    for r in sorted(counts):
        mult = f" (multiplicity {counts[r]})" if counts[r] > 1 else ""
        if is_padic_integer(r, p):
            digits = digits_from_zero(r, p, args.depth)
            lines.append(f"{r}{mult}: in Z_{p}, digits {_fmt_digits(digits)[:-1]}, ...]")
        else:
            lines.append(f"{r}{mult}: not in Z_{p}")
    if f.residual.degree > 0:
        for pref in zp_root_prefixes(f.residual, p, args.depth):
            kind = "certified root prefix" if pref.certified else "possible root prefix (uncertified)"
            lines.append(f"residual {f.residual}: {kind} {_fmt_digits(pref.digits)}")
    return "\n".join(lines) if lines else "none"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="padictrees", description="p-adic valuations and valuation trees")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("val", help="valuation of f(n)")
    sp.add_argument("expr")
    sp.add_argument("--at", type=int, required=True, metavar="N")
    sp.add_argument("-p", type=int, required=True)
    sp.set_defaults(func=cmd_val)

    sp = sub.add_parser("expand", help="p-adic digits of a rational")
    sp.add_argument("rational")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--digits", type=int, default=5)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("tree", help="build and render a valuation tree")
    sp.add_argument("expr")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--engine", choices=ENGINES, default="auto")
    sp.add_argument("--depth", type=int, default=5)
    sp.add_argument("--format", choices=("ascii", "dot", "json", "latex"), default="ascii")
    sp.add_argument("--extra-depth", type=int, default=4)
    sp.add_argument("--root-depth", type=int, default=None, help="lifting depth for residual roots (partial engine)")
    sp.add_argument("--no-labels", action="store_true", help="omit branch labels")
    sp.set_defaults(func=cmd_tree)

    sp = sub.add_parser("diff", help="compare the analytic and empirical trees")
    sp.add_argument("expr")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--depth", type=int, default=5)
    sp.add_argument("--extra-depth", type=int, default=4)
    sp.set_defaults(func=cmd_diff)

    sp = sub.add_parser("roots", help="rational roots and Z_p root prefixes")
    sp.add_argument("expr")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--depth", type=int, default=5)
    sp.set_defaults(func=cmd_roots)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotFactorableError, ZeroPolynomialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
