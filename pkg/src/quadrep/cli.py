"""Command-line front end.

    quadrep solve 435629 --d 5 --verbose
    quadrep sqrtmod -7 9241
    quadrep factor 435629
    quadrep cf 367 1187
    quadrep smith 13

Exit status: 0 when something was found, 1 when nothing was, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional

from .compose import smith_two_squares, solve_general
from .contfrac import bezout_from_trace, expand
from .cornacchia import ProblemSpec, Representation, cornacchia_step, solve_d1_for_root, solve_proper
from .factor import FactorizationError, factorize
from .modsqrt import normalize_root, sqrt_minus_d_mod_m, sqrt_mod
from .oracle import brute_solutions

EXIT_FOUND, EXIT_NONE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _ints(values) -> str:
    return " ".join(str(v) for v in values)


def _solution_json(rep: Representation) -> dict:
    return {
        "x": str(rep.x),
        "y": str(rep.y),
        "proper": rep.proper,
        "w": None if rep.w is None else str(rep.w),
    }


def cmd_solve(args, out) -> int:
    m, d = args.m, args.d
    if m < 2 or d < 1:
        raise UsageError(f"need m >= 2 and d >= 1, got m={m}, d={d}")
    if math.gcd(d, m) != 1:
        raise UsageError(f"gcd(d, m) = {math.gcd(d, m)}; the equation needs gcd(d, m) = 1")
    spec = ProblemSpec(d, m)
    f = factorize(m)
    roots = sqrt_minus_d_mod_m(d, m, f)
    want_improper = args.improper and not args.proper_only

    trace: List[str] = []
    if args.verbose:
        trace.append(f"m = {f}")
        for w in roots:
            if d == 1:
                rep = solve_d1_for_root(w, m)
                trace.append(f"w={w} t={rep.x} D={rep.y} -> solution")
            else:
                step = cornacchia_step(w, spec)
                verdict = "solution" if step.accepted else "rejected"
                trace.append(f"w={w} t_nu={step.t_prev} t={step.t} D={step.D} -> {verdict}")

    if args.brute:
        sols = brute_solutions(d, m)
        proper_w = {r.key: r.w for r in solve_proper(spec, f)}
        sols = [Representation(r.x, r.y, d, m, r.proper, proper_w.get(r.key)) for r in sols]
        if d == 1:
            sols = [r for r in sols if r.x >= r.y]
    elif want_improper:
        proper_w = {r.key: r.w for r in solve_proper(spec, f)}
        sols = [Representation(r.x, r.y, d, m, r.proper, proper_w.get(r.key)) for r in solve_general(spec, f)]
    else:
        sols = solve_proper(spec, f)
    if not want_improper:
        sols = [r for r in sols if r.proper]

    if args.json:
        report = {
            "m": str(m),
            "d": str(d),
            "solutions": [_solution_json(r) for r in sols],
            "roots": [str(w) for w in roots],
        }
        json.dump(report, out, indent=2)
        out.write("\n")
    else:
        for line in trace:
            print(line, file=out)
        print(f"roots: {_ints(roots) or '(none)'}", file=out)
        for rep in sols:
            print(rep, file=out)
        if not sols:
            print("no solution" if want_improper else "no proper solution", file=out)
    return EXIT_FOUND if sols else EXIT_NONE


def cmd_sqrtmod(args, out) -> int:
    a, m = args.a, args.m
    if m < 2:
        raise UsageError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise UsageError(f"gcd(a, m) = {math.gcd(a, m)}; only units are supported")
    roots = sorted({normalize_root(r, m) for r in sqrt_mod(a, m)})
    for r in roots:
        print(r, file=out)
    if not roots:
        print(f"{a % m} is not a square modulo {m}", file=out)
        return EXIT_NONE
    return EXIT_FOUND


def cmd_factor(args, out) -> int:
    if args.m < 2:
        raise UsageError(f"need m >= 2, got {args.m}")
    print(factorize(args.m), file=out)
    return EXIT_FOUND


def cmd_cf(args, out) -> int:
    a, b = args.a, args.b
    if b < 2 or a < 0:
        raise UsageError(f"need a >= 0 and b >= 2, got a={a}, b={b}")
    exp = expand(a, b)
    print(f"quotients: {_ints(exp.quotients)}", file=out)
    print(f"remainders: {_ints(exp.remainders)}", file=out)
    print(f"A: {_ints(exp.conv_num)}", file=out)
    print(f"B: {_ints(exp.conv_den)}", file=out)
    if exp.k >= 1:
        s, t = bezout_from_trace(exp)
        op = "-" if t >= 0 else "+"
        print(f"{s}*{a} {op} {abs(t)}*{b} = {exp.gcd}", file=out)
    return EXIT_FOUND


def cmd_smith(args, out) -> int:
    p = args.p
    try:
        h, x, y = smith_two_squares(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"h={h} x={x} y={y}", file=out)
    return EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadrep", description="Solve x^2 + d*y^2 = m with Cornacchia's algorithm.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="representations of m by x^2 + d*y^2")
    p.add_argument("m", type=_int)
    p.add_argument("--d", type=_int, default=1, help="coefficient d >= 1 (default 1)")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--proper-only", action="store_true", help="report proper solutions only (default)")
    kind.add_argument("--improper", action="store_true", help="also report improper solutions")
    p.add_argument("--brute", action="store_true", help="use brute-force enumeration instead")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--verbose", "-v", action="store_true", help="print the per-root stopping data")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sqrtmod", help="normalized square roots of a modulo m")
    p.add_argument("a", type=_int)
    p.add_argument("m", type=_int)
    p.set_defaults(func=cmd_sqrtmod)

    p = sub.add_parser("factor", help="prime factorization")
    p.add_argument("m", type=_int)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("cf", help="continued fraction expansion of a/b")
    p.add_argument("a", type=_int)
    p.add_argument("b", type=_int)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("smith", help="two-squares decomposition of a prime p = 1 mod 4")
    p.add_argument("p", type=_int)
    p.set_defaults(func=cmd_smith)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_FOUND
    try:
        return args.func(args, out)
    except (UsageError, FactorizationError, ValueError) as exc:
        print(f"quadrep {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
