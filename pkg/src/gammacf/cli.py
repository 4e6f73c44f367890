"""Command-line interface: ``gammacf <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import perm as P
from .cfrac import CFFamily, Family, FAMILY_PARAMS, JFraction, family_jfraction, jf_moments
from .colored import ColoredPermutation, b_excedance_stats, colored_stats, cros_colored
from .laguerre import InvalidHistory, LaguerreHistory, phi, phi_inverse
from .poly import NotExpressible, Poly, expand_SZ_basis, gamma_expand, poly_to_json
from .verify import (Budget, BudgetExceeded, IDENTITIES, TABLE_NAMES, emit_table,
                     get_seed, run_identity, table_rows, verify_all)


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(doc) -> None:
    _out(json.dumps(doc, ensure_ascii=False, indent=2))


def _number(text: str):
    f = Fraction(text.strip())
    return f.numerator if f.denominator == 1 else f


def _json_value(v):
    if isinstance(v, Poly):
        return poly_to_json(v)
    if isinstance(v, Fraction):
        return str(v)
    return v


# ----------------------------------------------------------------------


def cmd_stats(args) -> int:
    colored = args.r is not None or "^" in args.perm
    if colored:
        s = ColoredPermutation.parse(args.perm, args.r or 2)
        doc = {"perm": str(s), "r": s.r, **colored_stats(s)._asdict(), "cros": cros_colored(s)}
        if s.r == 2:
            doc.update(b_excedance_stats(s)._asdict())
    else:
        w = P.Permutation.parse(args.perm)
        doc = {"perm": str(w), **P.linear_stats(w)._asdict(),
               **P.crossing_stats(w)._asdict(), **P.cyclic_stats(w)._asdict(),
               **P.pattern_stats(w)._asdict(), "fmax": P.fmax(w),
               "dd_sigma0": P.dd_sigma0(w)}
    _dump(doc)
    return 0


def _budget(args) -> Budget:
    cap = args.max_cardinality
    return Budget(max_perm=cap or Budget.max_perm,
                  max_colored=args.max_colored or cap or Budget.max_colored)


def cmd_table(args) -> int:
    budget = _budget(args)
    _out(emit_table(args.name, args.n, args.r, args.format, budget))
    if args.figure:
        from .plotting import plot_table
        plot_table(args.name, table_rows(args.name, args.n, args.r, budget), args.figure)
    return 0


def cmd_verify(args) -> int:
    budget = _budget(args)
    if args.all:
        progress = None if args.json else (lambda rep: _out(rep.line()))
        reports = verify_all(budget, progress=progress)
    else:
        if not args.identity or args.n is None:
            raise SystemExit("verify needs --all or both --identity and --n")
        reports = [run_identity(args.identity, args.n, args.r, budget)]
        if not args.json:
            _out(reports[0].line())
    failures = sum(not rep.ok for rep in reports)
    if args.json:
        _dump({"seed": get_seed(), "failures": failures,
               "reports": [rep.to_json() for rep in reports]})
    elif args.all:
        _out(f"{len(reports) - failures}/{len(reports)} passed")
    return 0 if failures == 0 else 1


def cmd_expand(args) -> int:
    p = Poly(_number(c) for c in args.coeffs.split(","))
    try:
        if args.basis == "gamma":
            coeffs = list(gamma_expand(p, args.d).gammas)
        else:
            coeffs = list(expand_SZ_basis(p, args.d))
    except NotExpressible as err:
        _dump({"basis": args.basis, "d": args.d, "error": str(err),
               "residual": [_json_value(c) for c in err.residual.coeffs]})
        return 1
    _dump({"basis": args.basis, "d": args.d, "coeffs": [_json_value(c) for c in coeffs]})
    return 0


def cmd_cfrac(args) -> int:
    if args.custom_b or args.custom_lam:
        b = tuple(_number(x) for x in args.custom_b.split(","))
        lam = tuple(_number(x) for x in args.custom_lam.split(",")) if args.custom_lam else ()
        jf = JFraction(b, lam)
        label = "custom"
    else:
        fam = Family(args.family)
        params = {}
        for item in args.param or []:
            key, _, val = item.partition("=")
            params[key] = _number(val)
        if "r" in FAMILY_PARAMS[fam]:
            params["r"] = args.r
        jf = family_jfraction(CFFamily(fam, params), args.order)
        label = fam.value
    moments = jf_moments(jf, args.order)
    _dump({"family": label, "order": args.order,
           "moments": [_json_value(m) for m in moments]})
    return 0


def cmd_bijection(args) -> int:
    if args.invert:
        doc = json.loads(Path(args.history).read_text(encoding="utf-8"))
        try:
            s = phi_inverse(LaguerreHistory.from_json(doc))
        except InvalidHistory as err:
            _out(f"invalid history: {err}")
            return 1
        _out(str(s))
        return 0
    s = ColoredPermutation.parse(args.perm, args.r)
    h = phi(s)
    st = colored_stats(s)
    exps = {"q": cros_colored(s), "t": st.wexa, "tt": st.dropa, "w": st.wexc,
            "wt": st.dropc, "x": st.fixa, "xt": st.fixc, "y": st.csumw, "yt": st.csumd}
    mono = " ".join(k if e == 1 else f"{k}^{e}" for k, e in exps.items() if e) or "1"
    _dump({"history": h.to_json(), "weight": exps, "monomial": mono})
    if args.ascii:
        _out(h.ascii())
    return 0


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammacf",
        description="Permutation statistics, gamma expansions, continued fractions "
                    "and Laguerre histories with exhaustive identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_opts(p):
        p.add_argument("--max-cardinality", "--budget", type=int, default=None,
                       help="cap on |S_n| (and on colored groups unless --max-colored)")
        p.add_argument("--max-colored", type=int, default=None,
                       help="cap on |Z_r wr S_n|")

    p = sub.add_parser("stats", help="statistics of one (colored) permutation")
    p.add_argument("--perm", required=True, help='e.g. "9 3 7 4 6 10 5 8 1 2" or "4 7^1 2"')
    p.add_argument("--r", type=int, default=None, help="number of colors")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("table", help="emit a coefficient table")
    p.add_argument("--name", required=True, choices=TABLE_NAMES)
    p.add_argument("--n", type=int, required=True, help="largest n")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--figure", default=None, help="also write a PNG/PDF coefficient plot")
    budget_opts(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check identities over finite ranges")
    p.add_argument("--identity", choices=sorted(IDENTITIES))
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--all", action="store_true", help="run the default plan")
    p.add_argument("--json", action="store_true")
    budget_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", help="expand a polynomial in the gamma or SZ basis")
    p.add_argument("--coeffs", required=True, help="c0,c1,... (ascending)")
    p.add_argument("--basis", choices=("gamma", "sz"), default="gamma")
    p.add_argument("--d", type=int, required=True,
                   help="center degree (gamma) or n for t^k(1+t^2)^(n-k) (sz)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("cfrac", help="moments of a J-fraction")
    p.add_argument("--family", choices=[f.value for f in Family], default="derange-D")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="numeric family parameter, repeatable")
    p.add_argument("--custom-b", default=None, help="b0,b1,...")
    p.add_argument("--custom-lam", default=None, help="lam1,lam2,...")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("bijection", help="colored permutation <-> Laguerre history")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--perm", default=None)
    p.add_argument("--invert", action="store_true")
    p.add_argument("--history", default=None, help="history JSON file (with --invert)")
    p.add_argument("--ascii", action="store_true", help="also print the path as text")
    p.set_defaults(func=cmd_bijection)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        sys.stdout.reconfigure(encoding="utf-8", newline="\n")
    except (AttributeError, ValueError):
        pass
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bijection":
        if args.invert and not args.history:
            parser.error("--invert needs --history")
        if not args.invert and not args.perm:
            parser.error("bijection needs --perm or --invert")
    if args.command == "cfrac" and args.custom_lam and not args.custom_b:
        parser.error("--custom-lam needs --custom-b")
    try:
        return args.func(args)
    except BudgetExceeded as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
