"""Command-line surface.

Subcommands: hurwitz, trace, rtf-verify, moments, equidist, bounds,
mass-check, selftest.  Exit codes: 0 success, 1 verification failure,
2 usage error.  Exact rationals are emitted as "p/q" strings; floats carry
17 significant digits.  Report subcommands accept --plot-dir to render
matplotlib figures next to the delimited output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cyclotomic import CyclotomicRational
from .dirichlet import DirichletCharacter
from .trace import TraceContext, trace_T


def _fmt_rational(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _fmt_float(x: float) -> str:
    return f"{float(x):.17g}"


def _jsonable(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, CyclotomicRational):
        return {"order": v.order, "coeffs": [_fmt_rational(c) for c in v.coeffs]}
    if isinstance(v, Fraction):
        return _fmt_rational(v)
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def _parse_chi(spec: str, N: int) -> DirichletCharacter:
    if spec == "trivial":
        return DirichletCharacter.principal(N)
    if spec.startswith("exps="):
        exps = tuple(int(x) for x in spec[len("exps="):].split(",") if x != "")
        return DirichletCharacter(N, exps)
    raise ValueError(f"bad character spec {spec!r}; use 'trivial' or 'exps=a,b,...'")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hurwitztrace",
        description="Hurwitz class numbers, Hecke trace formulas, and "
        "semicircle equidistribution reports (exact arithmetic).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hurwitz", help="Hurwitz class numbers H(D)")
    s.add_argument("--D", type=int, help="single discriminant (prints D,num,den)")
    s.add_argument("--D-max", type=int, help="emit the CSV table for D <= D-max")
    s.add_argument("--out", help="output path (default stdout)")

    s = sub.add_parser("trace", help="tr T(m) | S_k(N, chi)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--N", type=int, default=1)
    s.add_argument("--chi", default="trivial")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--breakdown", action="store_true")
    s.add_argument("--out")

    s = sub.add_parser("rtf-verify", help="resolvent trace identity check")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--N", type=int, default=1)
    s.add_argument("--chi", default="trivial")
    s.add_argument("--order", type=int, default=10)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--out")

    s = sub.add_parser("moments", help="A_{k,q}(nu) table")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--nu-max", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--plot-dir")

    s = sub.add_parser("equidist", help="semicircle comparison report")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--nu", required=True, help="comma-separated exponents")
    s.add_argument("--grid", type=int, default=20)
    s.add_argument("--json", action="store_true")
    s.add_argument("--csv", action="store_true")
    s.add_argument("--out")
    s.add_argument("--plot-dir")

    s = sub.add_parser("bounds", help="moment bound sweep")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--nu-max", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--plot-dir")

    s = sub.add_parser("mass-check", help="Hurwitz mass identity check")
    s.add_argument("--m-max", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--plot-dir")

    s = sub.add_parser("selftest", help="oracle-vs-pipeline reconciliations")
    s.add_argument("--threads", type=int, default=1)
    return p


def _cmd_hurwitz(args) -> int:
    from . import quadforms

    if args.D is None and args.D_max is None:
        raise ValueError("one of --D or --D-max is required")
    if args.D is not None:
        h = quadforms.hurwitz_H(args.D)
        _emit(f"{args.D},{h.numerator},{h.denominator}\n", args.out)
        return 0
    import io

    buf = io.StringIO()
    quadforms.write_hurwitz_table(buf, args.D_max)
    _emit(buf.getvalue(), args.out)
    return 0


def _cmd_trace(args) -> int:
    chi = _parse_chi(args.chi, args.N)
    ctx = TraceContext(args.k, args.N, chi)
    br = trace_T(args.m, ctx)
    if args.breakdown:
        payload = {
            "A1": br.A1,
            "A2": br.A2,
            "A3": br.A3,
            "A4": br.A4,
            "total": br.total,
            "degenerate": br.degenerate,
        }
    else:
        payload = {"total": br.total, "degenerate": br.degenerate}
    _emit(json.dumps(_jsonable(payload)) + "\n", args.out)
    return 0


def _cmd_rtf_verify(args) -> int:
    from .resolvent import verify_rtf

    chi = _parse_chi(args.chi, args.N)
    ctx = TraceContext(args.k, args.N, chi)
    if args.threads > 1:
        # prewarm the per-order class-number rows; results are merged into
        # the shared caches, so the verification output is thread-count free
        from concurrent.futures import ThreadPoolExecutor

        from .trace import hecke_H_values

        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            list(
                pool.map(
                    lambda nu: hecke_H_values(args.N, chi, args.q**nu),
                    range(args.order),
                )
            )
    report = verify_rtf(args.q, ctx, args.order)
    payload = {
        "q": report["q"],
        "k": report["k"],
        "N": report["N"],
        "chi": report["chi"],
        "order": report["order"],
        "pass": report["pass"],
        "first_fail": report["first_fail"],
    }
    if report["first_fail"] is not None:
        i = report["first_fail"]
        payload["fail_detail"] = {
            "lhs": report["lhs"][i],
            "rhs": report["rhs"][i],
            "diff": report["diff"][i],
        }
    _emit(json.dumps(_jsonable(payload)) + "\n", args.out)
    return 0 if report["first_fail"] is None else 1


def _cmd_moments(args) -> int:
    from .resolvent import moment_A

    rows = []
    lines = ["nu,A_value_num,A_value_den,normalized_float\n"]
    for nu in range(args.nu_max + 1):
        value = moment_A(args.k, args.q, nu)
        normalized = abs(float(value)) * args.q ** (-nu / 2)
        rows.append({"nu": nu, "value": value, "normalized": normalized})
        lines.append(
            f"{nu},{value.numerator},{value.denominator},{_fmt_float(normalized)}\n"
        )
    _emit("".join(lines), args.out)
    if args.plot_dir:
        from .plots import render_moments

        render_moments(rows, args.q, args.k, args.plot_dir)
    return 0


def _cmd_equidist(args) -> int:
    from .equidist import equidist_report

    nus = [int(x) for x in args.nu.split(",") if x != ""]
    report = equidist_report(args.q, nus, args.grid)
    if args.json and not args.csv:
        _emit(json.dumps(_jsonable(report)) + "\n", args.out)
    else:
        lines = ["nu,alpha,beta,mass_num,mass_den,ratio,semicircle,abs_err\n"]
        for r in report["rows"]:
            mass = Fraction(r["mass"])
            lines.append(
                f"{r['nu']},{r['alpha']},{r['beta']},{mass.numerator},"
                f"{mass.denominator},{_fmt_float(r['ratio'])},"
                f"{_fmt_float(r['semicircle'])},{_fmt_float(r['abs_err'])}\n"
            )
        lines.append("nu,discrepancy,normalized_mass_num,normalized_mass_den,normalized_err\n")
        for s in report["summaries"]:
            nm = Fraction(s["normalized_mass"])
            lines.append(
                f"{s['nu']},{_fmt_float(s['discrepancy'])},{nm.numerator},"
                f"{nm.denominator},{_fmt_float(s['normalized_err'])}\n"
            )
        _emit("".join(lines), args.out)
    if args.plot_dir:
        from .plots import render_equidist

        render_equidist(report, args.plot_dir)
    return 0


def _cmd_bounds(args) -> int:
    from .equidist import bound_sweep

    report = bound_sweep(args.q, args.n_max, args.nu_max)
    lines = ["n,nu,moment_x_num,moment_x_den,moment_U_num,moment_U_den,r_monomial,r_chebyshev\n"]
    for r in report["rows"]:
        mx, mu = r["moment_x"], r["moment_U"]
        lines.append(
            f"{r['n']},{r['nu']},{mx.numerator},{mx.denominator},"
            f"{mu.numerator},{mu.denominator},"
            f"{_fmt_float(r['r_monomial'])},{_fmt_float(r['r_chebyshev'])}\n"
        )
    lines.append("n,bounded\n")
    for n, flag in sorted(report["bounded_flags"].items()):
        lines.append(f"{n},{int(flag)}\n")
    _emit("".join(lines), args.out)
    if args.plot_dir:
        from .plots import render_bounds

        render_bounds(report, args.plot_dir)
    return 0 if all(report["bounded_flags"].values()) else 1


def _cmd_mass_check(args) -> int:
    from .equidist import mass_check

    ok, first_bad, rows = mass_check(args.m_max)
    lines = ["m,mass_num,mass_den,divisor_side,ok\n"]
    for r in rows:
        mass = Fraction(r["mass"])
        lines.append(
            f"{r['m']},{mass.numerator},{mass.denominator},"
            f"{r['divisor_side']},{int(r['ok'])}\n"
        )
    _emit("".join(lines), args.out)
    if args.plot_dir:
        from .plots import render_mass

        render_mass(rows, args.plot_dir)
    return 0 if ok else 1


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    ok, lines = run_selftest(threads=args.threads)
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0 if ok else 1


_HANDLERS = {
    "hurwitz": _cmd_hurwitz,
    "trace": _cmd_trace,
    "rtf-verify": _cmd_rtf_verify,
    "moments": _cmd_moments,
    "equidist": _cmd_equidist,
    "bounds": _cmd_bounds,
    "mass-check": _cmd_mass_check,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
