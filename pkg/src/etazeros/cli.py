"""Command-line front end.

Subcommands
-----------
eval       evaluate F(s) and zeta(s) at one strip point
coeffs     emit the exact coefficient table (JSON or aligned text)
verify     run a numbered verification suite (or all of them)
decompose  dump the pairing plan and per-interval contributions
zeros      scan the critical line and refine the bracketed zeros

Exit status: 0 success, 1 a gating verification cell failed, 2 numerical
non-convergence, 3 usage error.  Output is deterministic: repeated runs with
the same arguments produce byte-identical bytes (no timestamps, sorted JSON
keys, fixed float rendering); CSV carries 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import verify
from .coeffs import CoefficientTable
from .decomposition import interval_contributions, make_plan
from .quadrature import QuadratureError, QuadratureSpec
from .report import fmt17
from .series import SeriesError, choose_K_R, series_lower_integral
from .special import ComplexPoint, F, Gamma, one_minus_two_pow, zeta_strip
from .zerofinder import EtaConvergenceError, eta_oracle, find_zeros, zeta_oracle

__all__ = ["main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10,
                        help="quadrature relative tolerance (default 1e-10)")
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="json", dest="fmt")
    common.add_argument("--out", type=str, default=None,
                        help="write output to this path instead of stdout")

    p = _Parser(prog="etazeros", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=_Parser)

    pe = sub.add_parser("eval", help="evaluate F and zeta at s = a + ib",
                        parents=[common])
    pe.add_argument("--a", type=float, required=True)
    pe.add_argument("--b", type=float, required=True)
    pe.add_argument("--method", default="integral",
                    choices=("integral", "series+decomposition", "oracle"))

    pc = sub.add_parser("coeffs", help="exact coefficient table",
                        parents=[common])
    pc.add_argument("--n-max", type=int, default=15)

    pv = sub.add_parser("verify", help="run verification suites",
                        parents=[common])
    pv.add_argument("--theorem", type=int, default=None)
    pv.add_argument("--all", action="store_true")
    pv.add_argument("--grid", "--b-grid", dest="grid", type=str, default=None,
                    help="comma-separated b grid override")

    pd = sub.add_parser("decompose", help="pairing plan and contributions",
                        parents=[common])
    pd.add_argument("--a", type=float, required=True)
    pd.add_argument("--b", type=float, required=True)
    pd.add_argument("--count", type=int, default=20,
                    help="number of half-period contributions to emit")

    pz = sub.add_parser("zeros", help="critical-line zero scan",
                        parents=[common])
    pz.add_argument("--b-min", type=float, required=True)
    pz.add_argument("--b-max", type=float, required=True)
    pz.add_argument("--step", type=float, default=0.25)
    pz.add_argument("--zero-tol", type=float, default=1e-6)
    return p


# ---------------------------------------------------------------------------
# Subcommand implementations (each returns (exit_code, text)).

def _cmd_eval(args, q: QuadratureSpec):
    p = ComplexPoint(args.a, args.b)
    method = args.method
    if method == "integral":
        ev = F(p, q)
        f_re, f_im = ev.value.re, ev.value.im
        err = ev.err
        try:
            z = zeta_strip(p, q)
            z_re, z_im = z.value.re, z.value.im
        except QuadratureError:
            z_re = z_im = None   # gamma below its noise floor: no quotient
    elif method == "series+decomposition":
        from .decomposition import upper_integral
        if p.b <= 0:
            raise UsageError("series+decomposition needs b > 0")
        K, R = choose_K_R(p.b, 2.0)
        head = series_lower_integral(p.a, p.b, K, R, tol=1e-13)
        plan = make_plan(p.a, p.b, q)
        tail, tail_err = upper_integral(plan, q)
        f_im = head.value + tail
        f_re = F(p, q).value.re     # no closed series for the cos head
        err = head.tail_bound + tail_err
        denom = one_minus_two_pow(p)
        gam = Gamma(p, q).value.value
        zc = complex(f_re, f_im) / denom / gam if gam != 0 else None
        z_re, z_im = (zc.real, zc.imag) if zc is not None else (None, None)
    else:  # oracle
        eta = eta_oracle(p, tol=1e-12)
        gam = Gamma(p, q).value.value
        fc = gam * eta.value
        f_re, f_im = fc.real, fc.imag
        err = 1e-12 * abs(fc)
        z = zeta_oracle(p, tol=1e-12)
        z_re, z_im = z.re, z.im
    payload = {"a": p.a, "b": p.b, "method": method,
               "F_re": f_re, "F_im": f_im, "F_abs": math.hypot(f_re, f_im),
               "zeta_re": z_re, "zeta_im": z_im, "err_est": err}
    if args.fmt == "csv":
        keys = ["a", "b", "F_re", "F_im", "F_abs", "zeta_re", "zeta_im",
                "err_est"]
        head = ",".join(keys)
        row = ",".join("" if payload[k] is None else fmt17(payload[k])
                       for k in keys)
        return 0, f"{head}\n{row}\n"
    if args.fmt == "text":
        lines = [f"{k} = {v if v is not None else 'unresolved'}"
                 for k, v in payload.items()]
        return 0, "\n".join(lines) + "\n"
    return 0, json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cmd_coeffs(args, q: QuadratureSpec):
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    table = CoefficientTable.build(args.n_max)
    rows = [{"n": n,
             "g_n_numerator": table.g_deriv[n].numerator,
             "g_n_denominator": table.g_deriv[n].denominator,
             "g_n_over_n_factorial": table.g_over_factorial_f64[n]}
            for n in range(args.n_max + 1)]
    if args.fmt == "json":
        return 0, json.dumps(rows, sort_keys=True, indent=2) + "\n"
    if args.fmt == "csv":
        out = ["n,g_n_numerator,g_n_denominator,g_n_over_n_factorial"]
        for r in rows:
            out.append(f"{r['n']},{r['g_n_numerator']},{r['g_n_denominator']},"
                       f"{fmt17(r['g_n_over_n_factorial'])}")
        return 0, "\n".join(out) + "\n"
    frac = [("0" if table.g_deriv[n] == 0 else
             f"{table.g_deriv[n].numerator}/{table.g_deriv[n].denominator}")
            for n in range(args.n_max + 1)]
    w_n = max(2, len(str(args.n_max)))
    w_f = max(len(s) for s in frac)
    lines = [f"{'n'.rjust(w_n)}  {'g_n(0)'.ljust(w_f)}  g_n(0)/n!"]
    for n in range(args.n_max + 1):
        lines.append(f"{str(n).rjust(w_n)}  {frac[n].ljust(w_f)}  "
                     f"{fmt17(table.g_over_factorial_f64[n])}")
    return 0, "\n".join(lines) + "\n"


def _cmd_verify(args, q: QuadratureSpec):
    b_grid = None
    if args.grid:
        try:
            b_grid = tuple(float(x) for x in args.grid.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --grid: {exc}") from None
    if args.all:
        reports = verify.run_all(q)
    elif args.theorem is not None:
        reports = [verify.run_theorem(args.theorem, q, b_grid)]
    else:
        raise UsageError("verify needs --theorem N or --all")
    ok = all(r.passed for r in reports)
    if args.fmt == "json":
        obj = {"passed": ok, "reports": [r.to_json_obj() for r in reports]}
        text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    elif args.fmt == "csv":
        text = "".join(r.to_csv() for r in reports)
    else:
        text = "\n".join(r.to_text() for r in reports)
    return (0 if ok else 1), text


def _cmd_decompose(args, q: QuadratureSpec):
    if not 0.0 < args.a < 1.0:
        raise UsageError("--a must lie in (0, 1)")
    plan = make_plan(args.a, args.b, q)
    rows = interval_contributions(plan, args.count, q)
    if args.fmt == "csv":
        out = ["k,t_2k,t_2k_plus_1,contribution,cumulative"]
        for r in rows:
            out.append(",".join([str(r["k"]), fmt17(r["t_lo"]),
                                 fmt17(r["t_hi"]), fmt17(r["contribution"]),
                                 fmt17(r["cumulative"])]))
        return 0, "\n".join(out) + "\n"
    payload = {
        "a": plan.a, "b": plan.b, "K": plan.K, "R": plan.R, "c": plan.c,
        "truncation_k": plan.truncation_k,
        "endpoints": [plan.endpoint(2 * plan.K + j) for j in range(10)],
        "intervals": [{"k": r["k"], "t_lo": r["t_lo"], "t_hi": r["t_hi"],
                       "contribution": r["contribution"],
                       "cumulative": r["cumulative"]} for r in rows],
    }
    if args.fmt == "text":
        lines = [f"K = {plan.K}, R = {fmt17(plan.R)}, c = {fmt17(plan.c)}",
                 f"truncation period index = {plan.truncation_k}",
                 "k  t_2k  t_2k+1  contribution  cumulative"]
        for r in rows:
            lines.append("  ".join([str(r["k"]), fmt17(r["t_lo"]),
                                    fmt17(r["t_hi"]), fmt17(r["contribution"]),
                                    fmt17(r["cumulative"])]))
        return 0, "\n".join(lines) + "\n"
    return 0, json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cmd_zeros(args, q: QuadratureSpec):
    if not 0 < args.b_min < args.b_max:
        raise UsageError("need 0 < b_min < b_max")
    if not 0 < args.step <= 0.5:
        raise UsageError("step must be in (0, 0.5]")
    zeros, scan_rows = find_zeros(args.b_min, args.b_max, args.step,
                                  args.zero_tol, q)
    if args.fmt == "csv":
        out = ["b,F1,F2,absF"]
        for b, f1, f2, fa in scan_rows:
            out.append(",".join([fmt17(b), fmt17(f1), fmt17(f2), fmt17(fa)]))
        return 0, "\n".join(out) + "\n"
    payload = [{"b_star": z["b_star"], "residual": z["residual"],
                "method": z["method"],
                "b_star_integral": z["b_star_integral"],
                "residual_eta": z["residual_eta"],
                "integral_certified": z["integral_certified"],
                "route_gap": z["route_gap"]} for z in zeros]
    if args.fmt == "text":
        lines = [f"{len(payload)} zero(s) on [{args.b_min:g}, {args.b_max:g}]"]
        for z in payload:
            lines.append(f"  b = {fmt17(z['b_star'])}  residual |F| = "
                         f"{z['residual']:.3e}  ({z['method']})")
        return 0, "\n".join(lines) + "\n"
    return 0, json.dumps(payload, sort_keys=True, indent=2) + "\n"


_COMMANDS = {
    "eval": _cmd_eval,
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
    "decompose": _cmd_decompose,
    "zeros": _cmd_zeros,
}


def dispatch(args) -> tuple[int, str]:
    """Resolve a parsed namespace to (exit_code, output text)."""
    try:
        qspec = QuadratureSpec(target_tol=args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _COMMANDS[args.command](args, qspec)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        code, text = dispatch(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    except (QuadratureError, SeriesError, EtaConvergenceError) as exc:
        print(f"numerical non-convergence: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
