"""Command-line front end.

Exit codes: 0 all checks passed, 1 at least one congruence failure,
2 usage or hypothesis errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .core import is_prime
from .errors import HypothesisViolated, PoleSample, ScvError, UnknownCase
from .etaq import newform_series
from .gammap import DEFAULT_GAMMA_CAP, build_gamma_table, gamma_at
from .harness import CaseSpec, emit_report, list_cases, run_case
from .identities import (
    identity_corollary1,
    identity_corollary2,
    identity_theorem1,
    identity_theorem2,
)
from .quintic import DEFAULT_ENUM_CAP, count_quintic


def _parse_primes(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scv", description="supercongruence verification toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a registered verification case")
    verify.add_argument("--case", required=True, help="case name; see the list subcommand")
    verify.add_argument("--primes", type=_parse_primes, default=None, metavar="lo..hi")
    verify.add_argument("--mod-power", type=int, default=None, dest="k")
    verify.add_argument("--format", choices=("json", "csv"), default="json")
    verify.add_argument("--out", default=None)
    verify.add_argument("--threads", type=int, default=1)
    verify.add_argument("--gamma-cap", type=int, default=DEFAULT_GAMMA_CAP)
    verify.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)

    listing = sub.add_parser("list", help="list registered cases")
    del listing

    etaq = sub.add_parser("etaq", help="print eta-quotient coefficients")
    etaq.add_argument("--form", choices=("gamma", "a", "c"), required=True)
    etaq.add_argument("--upto", type=int, required=True)

    count = sub.add_parser("count", help="count points on the quintic threefold")
    count.add_argument("--prime", type=int, required=True)
    count.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)

    gamma = sub.add_parser("gamma", help="evaluate the p-adic gamma function")
    gamma.add_argument("--prime", type=int, required=True)
    gamma.add_argument("--power", type=int, default=1)
    gamma.add_argument("--at", required=True, metavar="m/d")
    gamma.add_argument("--gamma-cap", type=int, default=DEFAULT_GAMMA_CAP)

    ident = sub.add_parser("identity", help="check one exact identity instance")
    ident.add_argument("--which", choices=("3.1", "3.2", "3.3", "3.4"), required=True)
    ident.add_argument("--m", type=int, required=True)
    ident.add_argument("--n", type=int, required=True)
    ident.add_argument("--p-int", type=int, default=None)
    ident.add_argument("--c1", default="1")
    ident.add_argument("--c2", default="1")
    return parser


def _cmd_verify(args) -> int:
    spec = CaseSpec(
        name=args.case,
        primes=args.primes,
        k=args.k,
        gamma_cap=args.gamma_cap,
        enum_cap=args.enum_cap,
        threads=args.threads,
    )
    report = run_case(spec)
    text = emit_report(report, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    summary = report.summary
    sys.stderr.write(
        f"{args.case}: {summary['pass']} pass, {summary['fail']} fail, {summary['skip']} skip"
        f" ({report.elapsed_ms} ms)\n"
    )
    return 0 if report.ok else 1


def _cmd_etaq(args) -> int:
    series = newform_series(args.form, args.upto)
    for n, coeff in enumerate(series.coeffs):
        print(n, coeff)
    return 0


def _cmd_count(args) -> int:
    res = count_quintic(args.prime, args.enum_cap)
    print(f"p = {res.p}")
    print(f"N_p = {res.n_points}")
    print(f"hyperplane chart (x0 = 0): {res.part_hyperplane}")
    print(f"affine chart (x0 = 1): {res.part_affine}")
    return 0


def _cmd_gamma(args) -> int:
    p, k = args.prime, args.power
    if not is_prime(p) or p == 2:
        raise HypothesisViolated("--prime must be an odd prime")
    x = Fraction(args.at)
    table = build_gamma_table(p, k, args.gamma_cap)
    value = gamma_at(x, table)
    print(f"Gamma_{p}({x}) = {int(value)} (mod {p}^{k})")
    return 0


def _cmd_identity(args) -> int:
    if args.which == "3.1":
        residuals = identity_theorem1(args.m, args.n)
        ok = all(r == 0 for r in residuals)
        print(f"samples: {len(residuals)}, max |residual|: {max(abs(r) for r in residuals)}")
    elif args.which == "3.2":
        diff = identity_corollary1(args.m, args.n)
        ok = diff == 0
        print(f"difference: {diff}")
    else:
        if args.p_int is None:
            raise HypothesisViolated("--p-int is required for 3.3 and 3.4")
        c1, c2 = Fraction(args.c1), Fraction(args.c2)
        if args.which == "3.3":
            residuals = identity_theorem2(args.p_int, args.m, args.n, c1, c2)
            ok = all(r == 0 for r in residuals)
            print(f"samples: {len(residuals)}, max |residual|: {max(abs(r) for r in residuals)}")
        else:
            diff = identity_corollary2(args.p_int, args.m, args.n, c1, c2)
            ok = diff == 0
            print(f"difference: {diff}")
    print("pass" if ok else "fail")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "list":
            for name in list_cases():
                print(name)
            return 0
        if args.command == "etaq":
            return _cmd_etaq(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "gamma":
            return _cmd_gamma(args)
        if args.command == "identity":
            return _cmd_identity(args)
        parser.error(f"unknown command {args.command!r}")
    except (UnknownCase, HypothesisViolated, PoleSample, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ScvError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
