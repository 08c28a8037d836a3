"""Command-line interface.

Commands: sym, gb, verify, explore, involution, hilbert.  Exit codes:
0 = success / all verified, 1 = mathematical mismatch found, 2 = usage or
parse error.  The SYMGB_MAX_N environment variable caps sweep sizes.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import groebner, hilbert, involution, symfunc, verify
from .poly import PolyParseError, Polynomial, format_polynomial, parse_polynomial

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _parse_n_range(text: str) -> tuple:
    """"3" -> (3, 3); "1..5" -> (1, 5)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI")
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {text!r}; need 1 <= LO <= HI")
    return lo, hi


def _max_n_cap() -> Optional[int]:
    raw = os.environ.get("SYMGB_MAX_N")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"SYMGB_MAX_N={raw!r} is not an integer")
    if cap < 1:
        raise UsageError("SYMGB_MAX_N must be >= 1")
    return cap


def _parse_generators(spec: str, n: int, elementary_only: bool = False) -> List[Polynomial]:
    """Comma list of e-indices ("e1,e3") and/or raw polynomial text."""
    gens = []
    indices = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            raise UsageError("empty generator in --gens")
        if token.startswith("e") and token[1:].isdigit():
            i = int(token[1:])
            if not 1 <= i <= n:
                raise UsageError(f"generator {token} out of range e1..e{n}")
            indices.append(i)
            gens.append(symfunc.elementary(i, n, n))
        elif elementary_only:
            raise UsageError(f"explore accepts only e-indices, got {token!r}")
        else:
            try:
                gens.append(parse_polynomial(token, n))
            except PolyParseError as exc:
                raise UsageError(f"cannot parse generator {token!r}: {exc}")
    if elementary_only and len(set(indices)) != len(indices):
        raise UsageError("explore requires distinct e-indices")
    return gens


def _print_basis(gb: groebner.GroebnerBasis) -> None:
    for g in gb.elements:
        print(format_polynomial(g))


def cmd_sym(args) -> int:
    builders = {"e": symfunc.elementary, "h": symfunc.homogeneous,
                "p": symfunc.powersum}
    print(format_polynomial(builders[args.kind](args.k, args.n)))
    return 0


def cmd_gb(args) -> int:
    gens = _parse_generators(args.gens, args.n)
    try:
        gb = groebner.reduced_groebner_basis(gens)
    except groebner.ZeroIdealError:
        return 0  # zero ideal: empty basis, nothing to print
    _print_basis(gb)
    return 0


def cmd_explore(args) -> int:
    gens = _parse_generators(args.gens, args.n, elementary_only=True)
    gb = groebner.reduced_groebner_basis(gens)
    print(f"basis size: {len(gb)}")
    for g in gb.elements:
        print(format_polynomial(g))
    print("leading monomials: "
          + ", ".join(format_polynomial(Polynomial.from_monomial(m))
                      for m in gb.leading_monomials()))
    return 0


def cmd_verify(args) -> int:
    lo, hi = _parse_n_range(args.n)
    cap = _max_n_cap()
    if cap is not None:
        hi = min(hi, cap)
    hi = min(hi, verify.DEFAULT_MAX_N[args.target]) if args.no_limit is False else hi
    if hi < lo:
        raise UsageError("range is empty after applying caps")
    results = verify.run_sweep(args.target, lo, hi, fixed_k=args.k)
    failed = False
    for r in results:
        if args.format == "records":
            print(r.record())
        else:
            k = "" if r.k is None else f" k={r.k}"
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {r.target}{k} n={r.n}"
            if r.witness:
                line += f"  [{r.witness}]"
            print(line)
        failed = failed or not r.ok
    total = len(results)
    bad = sum(1 for r in results if not r.ok)
    print(f"{total - bad}/{total} cells passed")
    return 1 if failed else 0


def cmd_involution(args) -> int:
    report = involution.certify_involution(args.family, args.k, args.n)
    print(f"family={report.family} k={report.k} n={report.n} "
          f"carrier_size={report.carrier_size}")
    for name in ("carrier_closed", "is_involution", "sign_reversing",
                 "fixed_point_free", "weight_sum_zero"):
        print(f"{name}: {getattr(report, name)}")
    if args.trace:
        for line in involution.orbit_trace(args.family, args.k, args.n):
            print(line)
    return 0 if report.ok else 1


def cmd_hilbert(args) -> int:
    gb = verify.computed_gb_ek(args.n, args.n)
    series = hilbert.staircase_series(gb.leading_monomials(), args.n)
    expected = hilbert.closed_form_series(args.n)
    if args.format == "records":
        print(f"n={args.n} coeffs={list(series.coeffs)} "
              f"dimension={series.dimension()} "
              f"matches_closed_form={series == expected}")
    else:
        print(f"staircase series: {series}")
        print(f"closed form:      {expected}")
        print(f"dimension: {series.dimension()}")
    return 0 if series == expected else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgb",
        description="Exact Groebner-basis toolkit for ideals of elementary "
                    "symmetric polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sym", help="print a symmetric polynomial")
    p.add_argument("--kind", choices=("e", "h", "p"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_sym)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True,
                   help="comma list of e-indices and/or polynomial text")
    p.add_argument("--order", choices=("lex",), default="lex")
    p.set_defaults(fn=cmd_gb)

    p = sub.add_parser("verify", help="sweep-verify a target")
    p.add_argument("target", choices=verify.TARGETS)
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.add_argument("--k", type=int, default=None, help="fix k instead of sweeping")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--no-limit", action="store_true",
                   help="ignore the per-target default n ceiling")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("explore",
                       help="reduced GB of an arbitrary set of elementary generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True, help="comma list of e-indices")
    p.set_defaults(fn=cmd_explore)

    p = sub.add_parser("involution", help="certify a cancelling involution")
    p.add_argument("--family", choices=involution.FAMILIES, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=cmd_involution)

    p = sub.add_parser("hilbert", help="Hilbert series of the full elementary ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(fn=cmd_hilbert)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
