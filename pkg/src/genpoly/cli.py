"""Command-line surface.

Exit codes: 0 success, 1 verification failure, 2 usage error (argparse),
3 budget or size refusal.
"""

from __future__ import annotations

import argparse
import sys

from .exact import evaluate_at_q, format_u_polynomial, pgl_order
from .counting import (
    compute_a_two_variable,
    compute_ai_polynomial,
    compute_mahler_expansion,
    compute_r_poly,
    compute_s_polys,
    extract_factorization,
)
from .oracle import BudgetExceeded, census_generating_subspaces
from . import formats, verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

DEFAULT_MAX_D = 5


class SizeRefused(RuntimeError):
    pass


def _check_size(d, allow_large):
    if d > DEFAULT_MAX_D and not allow_large:
        raise SizeRefused(
            f"d = {d} exceeds the default symbolic limit {DEFAULT_MAX_D}; "
            "pass --allow-large to proceed")


def _print_poly_lines(out, label_fn, entries, fmt, kind):
    if fmt == "plain":
        for m, poly in entries:
            out.write(f"{label_fn(m)} = {formats.plain_polynomial(poly)}\n")
    elif fmt == "latex":
        out.write("\\begin{eqnarray*}\n")
        for m, poly in entries:
            out.write(f"{label_fn(m, latex=True)}&=&"
                      f"{formats.q_polynomial_to_latex(poly)}\\\\\n")
        out.write("\\end{eqnarray*}\n")
    elif fmt == "csv":
        out.write("m,polynomial\n")
        for m, poly in entries:
            out.write(f"{m},{formats.csv_escape(formats.plain_polynomial(poly))}\n")
    else:
        doc = {"kind": kind,
               "entries": [{"m": m, "poly": formats.q_polynomial_to_doc(poly)}
                           for m, poly in entries]}
        out.write(formats.emit(doc) + "\n")


def cmd_s_poly(args, out):
    _check_size(args.d, args.allow_large)
    s = compute_s_polys(args.d)
    if args.m is not None:
        entries = [(args.m, s[args.m].value)]
    else:
        entries = [(m, s[m].value) for m in range(args.d * args.d + 1)]

    def label(m, latex=False):
        return (f"s_{args.d}^{{({m})}}" if latex else f"s_{args.d}^({m})")

    _print_poly_lines(out, label, entries, args.format, "s_table")
    return EXIT_OK


def cmd_r_poly(args, out):
    _check_size(args.d, args.allow_large)
    if args.m is None:
        entries = [(m, compute_r_poly(args.d, m))
                   for m in range(args.d * args.d + 1)]
    else:
        entries = [(args.m, compute_r_poly(args.d, args.m))]

    def label(m, latex=False):
        return (f"r_{args.d}^{{({m})}}" if latex else f"r_{args.d}^({m})")

    _print_poly_lines(out, label, entries, args.format, "r_table")
    return EXIT_OK


def cmd_mahler(args, out):
    _check_size(args.d, args.allow_large)
    expansion = compute_mahler_expansion(args.d)
    entries = list(enumerate(expansion.coefficients))

    def label(l, latex=False):
        return (f"c_{{{l}}}" if latex else f"c_{l}")

    _print_poly_lines(out, label, entries, args.format, "mahler")
    return EXIT_OK


def _factored_doc(d):
    a = extract_factorization(d) if d >= 2 else compute_a_two_variable(d)
    doc = {
        "kind": "a2",
        "d": d,
        "prefactor": formats.rational_function_to_doc(a.prefactor),
        "u_power": d,
        "roots": ["u-1", "u-q"] if d >= 2 else [],
        "reduced": formats.u_polynomial_to_doc(a.reduced),
    }
    return a, doc


def cmd_a_poly(args, out):
    _check_size(args.d, args.allow_large)
    if args.u:
        a, doc = _factored_doc(args.d)
        if args.format == "json":
            out.write(formats.emit(doc) + "\n")
        elif args.format == "latex":
            if args.d >= 2:
                out.write(
                    "a_{%d}(q,u)=\\frac{u^{%d}(u-1)(u-q)}{%s}\\cdot"
                    "\\left(%s\\right)\n"
                    % (args.d, args.d,
                       formats.q_polynomial_to_latex(pgl_order(args.d)),
                       formats.u_polynomial_to_latex(a.reduced)))
            else:
                out.write("a_{1}(q,u)=u\n")
        else:
            out.write(f"a_{args.d}(q,u) = {format_u_polynomial(a.value)}\n")
            if args.d >= 2:
                out.write(
                    f"factored: u^{args.d} * (u-1) * (u-q) * "
                    f"({format_u_polynomial(a.reduced)}) / "
                    f"({formats.plain_polynomial(pgl_order(args.d))})\n")
        return EXIT_OK
    if args.m is None:
        print("a-poly needs --m or --u", file=sys.stderr)
        return EXIT_USAGE
    poly = compute_ai_polynomial(args.d, args.m).value

    def label(m, latex=False):
        return (f"a_{args.d}^{{({m})}}" if latex else f"a_{args.d}^({m})")

    _print_poly_lines(out, label, [(args.m, poly)], args.format, "a_table")
    return EXIT_OK


def cmd_table(args, out):
    return cmd_s_poly(args, out)


def cmd_census(args, out):
    if args.m is None:
        print("census needs --m", file=sys.stderr)
        return EXIT_USAGE
    result = census_generating_subspaces(
        args.d, args.p, args.m, budget=args.budget, workers=args.workers)
    poly = compute_s_polys(args.d)[args.m].value
    expected = int(evaluate_at_q(poly, args.p))
    doc = {
        "kind": "census",
        "d": args.d,
        "p": args.p,
        "m": args.m,
        "total": result.total_subspaces,
        "generating": result.generating_subspaces,
        "poly": expected,
        "agrees": result.generating_subspaces == expected,
    }
    if not args.no_timing:
        doc["elapsed"] = result.elapsed
    if args.format == "plain":
        out.write(
            "d=%(d)d p=%(p)d m=%(m)d total=%(total)d generating=%(generating)d "
            "poly=%(poly)d agrees=%(agrees)s\n" % doc)
    else:
        out.write(formats.emit(doc) + "\n")
    return EXIT_OK if doc["agrees"] else EXIT_VERIFY_FAILED


def cmd_verify(args, out):
    suite = args.suite
    if suite == "identities":
        results = verify.identities_suite()
    elif suite == "paper-tables":
        results = verify.paper_tables_suite()
    elif suite == "theorems":
        results = verify.theorems_suite(dmax=args.dmax)
    elif suite == "oracle":
        results = verify.oracle_suite(budget=args.budget, workers=args.workers)
    else:
        results = verify.all_suites(budget=args.budget, workers=args.workers,
                                    dmax=args.dmax)
    ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        timing = "" if args.no_timing else f" ({r.seconds:.2f}s)"
        out.write(f"{status} {r.name}{timing}: {r.detail}\n")
        ok = ok and r.passed
    out.write(f"{'OK' if ok else 'FAILED'}: "
              f"{sum(r.passed for r in results)}/{len(results)} checks passed\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="genpoly",
        description="Counting polynomials for generating subspaces of "
                    "matrix rings, with a brute-force finite-field oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_p=False, need_format=True):
        p.add_argument("--d", type=int, required=True, help="matrix dimension")
        p.add_argument("--m", type=int, default=None,
                       help="subspace dimension / number of generators")
        if need_p:
            p.add_argument("--p", type=int, required=True,
                           help="prime field size")
        if need_format:
            p.add_argument("--format", default="plain",
                           choices=["json", "latex", "csv", "plain"])
        p.add_argument("--budget", type=lambda s: int(float(s)), default=None,
                       help="enumeration budget (overrides GENPOLY_BUDGET)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--allow-large", action="store_true")
        p.add_argument("--no-timing", action="store_true")

    for name, fn in [("s-poly", cmd_s_poly), ("a-poly", cmd_a_poly),
                     ("r-poly", cmd_r_poly), ("mahler", cmd_mahler),
                     ("table", cmd_table)]:
        p = sub.add_parser(name)
        add_common(p)
        if name == "a-poly":
            p.add_argument("--u", action="store_true",
                           help="print the two-variable polynomial")
        p.set_defaults(fn=fn)

    p = sub.add_parser("census")
    add_common(p, need_p=True)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("verify")
    p.add_argument("--suite", default="all",
                   choices=["identities", "paper-tables", "oracle",
                            "theorems", "all"])
    p.add_argument("--budget", type=lambda s: int(float(s)), default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except SizeRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
