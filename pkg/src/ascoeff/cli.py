"""Command-line entry point."""
from __future__ import annotations

import argparse
import json
import sys

from .param_ring import ParamPoly, ParseError, ZERO

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_set(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(sorted(int(x) for x in text.split(",")))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _poly_out(p: ParamPoly, fmt: str, **extra) -> str:
    if fmt == "json":
        return json.dumps({**extra, "poly": p.to_json()}, sort_keys=True)
    return p.to_text()


def cmd_coeff(args) -> int:
    from .recurrence import coeff as rec_coeff
    from .setpair import coeff_setpair, setpair_xy
    from .young import coeff_young, young_xy

    n, i = args.n, args.i
    if args.xy:
        if args.method == "recurrence":
            raise UsageError("--xy needs --method young or setpair")
        if i > n:
            print("0")
            return EXIT_OK
        xy = (young_xy if args.method == "young" else setpair_xy)(i, n - i)
        print(xy.dumps() if args.format == "json" else xy.to_text())
        return EXIT_OK
    if i > n:
        p = ZERO
    elif args.method == "recurrence":
        p = rec_coeff(args.spec, n, i)
    else:
        if args.spec != "hat":
            raise UsageError("--spec applies to --method recurrence only")
        p = (coeff_young if args.method == "young" else coeff_setpair)(i, n - i)
    print(_poly_out(p, args.format, n=n, i=i))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suites import run_suite

    rep = run_suite(args.suite, args.max, args.points, args.seed, args.jobs)
    for line in rep.lines(args.format):
        print(line)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_psi(args) -> int:
    from .setpair import psi, weight_w_n_xy

    a, b = len(args.A), len(args.B)
    try:
        B2, A2 = psi(args.n, a, b, args.A, args.B)
    except ValueError as e:
        raise UsageError(str(e))
    if args.format == "json":
        print(json.dumps({"A": list(args.A), "B": list(args.B), "image": [list(B2), list(A2)],
                          "weight": weight_w_n_xy(args.n, args.A, args.B).to_json()},
                         sort_keys=True))
    else:
        print(f"{list(B2)} {list(A2)}")
    return EXIT_OK


def _spec_name(text: str) -> str:
    from .minors import KOORNWINDER, SPECIALIZATIONS

    name = text.replace(" ", "")
    if name in SPECIALIZATIONS or name in (KOORNWINDER, "none"):
        return name
    raise argparse.ArgumentTypeError(
        f"unknown specialization {text!r}; choose from {', '.join(SPECIALIZATIONS)}, "
        f"{KOORNWINDER}, none, all")


def cmd_minors(args) -> int:
    from .minors import all_specs, sweep_positivity

    specs = args.specialize or ["none"]
    if "all" in specs:
        specs = list(all_specs())
    try:
        specs = [_spec_name(s) for s in specs]
    except argparse.ArgumentTypeError as e:
        raise UsageError(str(e))
    if args.n < 1 or args.size < 1:
        raise UsageError("--n and --size must be >= 1")
    recs = sweep_positivity(args.n, args.size, tuple(specs), args.jobs)
    for r in recs:
        if args.format == "json":
            print(json.dumps(r.as_dict(), sort_keys=True))
        elif r.nonvanishing:
            status = "PASS" if r.nonneg else "FAIL"
            print(f"{status} {r.spec} rows={list(r.rows)} cols={list(r.cols)} terms={r.term_count}")
    return EXIT_OK if all(r.passed for r in recs) else EXIT_FAIL


def cmd_moments(args) -> int:
    from .moments import moments
    from .recurrence import SPECS

    for N, mu in enumerate(moments(SPECS[args.spec](), args.N)):
        print(_poly_out(mu, args.format, N=N) if args.format == "json" else f"mu_{N} = {mu}")
    return EXIT_OK


def cmd_zn(args) -> int:
    from .moments import z_fugacity, z_n

    p = (z_fugacity if args.xi else z_n)(args.N)
    print(_poly_out(p, args.format, N=args.N))
    return EXIT_OK if p.is_nonneg() else EXIT_FAIL


def _add_common(parser, top: bool) -> None:
    # the command-level copies default to SUPPRESS so they never clobber global values
    def d(v):
        return v if top else argparse.SUPPRESS
    parser.add_argument("--format", choices=("text", "json"), default=d("text"))
    parser.add_argument("--seed", type=int, default=d(0), help="seed for rational sample points")
    parser.add_argument("--jobs", type=int, default=d(1), help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ascoeff",
                                description="Coefficients of transformed Al-Salam-Chihara polynomials.")
    _add_common(p, top=True)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help):
        c = sub.add_parser(name, help=help)
        _add_common(c, top=False)
        return c

    c = command("coeff", help="g_{n,i}, the coefficient of x^i in p_n")
    c.add_argument("--n", type=_nonneg, required=True)
    c.add_argument("--i", type=_nonneg, required=True)
    c.add_argument("--method", choices=("recurrence", "young", "setpair"), default="recurrence")
    c.add_argument("--spec", choices=("hat", "prime", "fugacity"), default="hat")
    c.add_argument("--xy", action="store_true", help="print the X/Y form before specialization")
    c.set_defaults(func=cmd_coeff)

    v = command("verify", help="run a verification suite")
    v.add_argument("--suite", default="all",
                   choices=("all", "formulas", "lattice", "young", "setpair", "minors", "pasep"))
    v.add_argument("--max", type=_nonneg, default=6, help="size bound (n+k or n+a+b)")
    v.add_argument("--points", type=_nonneg, default=20, help="rational sample points")
    v.set_defaults(func=cmd_verify)

    s = command("psi", help="apply the exchange bijection")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--A", type=_int_set, required=True, help="e.g. 0,2,3")
    s.add_argument("--B", type=_int_set, required=True, help="e.g. 2,4,5,7")
    s.set_defaults(func=cmd_psi)

    m = command("minors", help="positivity sweep over minors of G")
    m.add_argument("--n", type=int, default=7, help="block size")
    m.add_argument("--size", type=int, default=3, help="largest minor size")
    m.add_argument("--specialize", action="append", metavar="VAR=VAL",
                   help="a=0, b=0, a=e1, b=e2, e1=0, e2=0, fugacity, none or all; repeatable")
    m.set_defaults(func=cmd_minors)

    mo = command("moments", help="moments mu_0..mu_N")
    mo.add_argument("--spec", choices=("hat", "prime", "fugacity"), default="prime")
    mo.add_argument("--N", type=_nonneg, required=True)
    mo.set_defaults(func=cmd_moments)

    z = command("zn", help="PASEP partition function Z_N")
    z.add_argument("--N", type=_nonneg, required=True)
    z.add_argument("--xi", action="store_true", help="fugacity version")
    z.set_defaults(func=cmd_zn)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
