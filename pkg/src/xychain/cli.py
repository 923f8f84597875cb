"""Command-line front end.

Subcommands ``eval``, ``sweep``, ``critical``, ``verify`` and ``mc-fidelity``.
Tabular output is long-format CSV (``gamma,eta,J,T,quantity,value``, plus
``stderr`` and ``xi`` columns when they apply) or the same records as JSON.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 numerical
non-convergence.
"""
import argparse
from concurrent.futures import ThreadPoolExecutor
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import criticality as crit
from . import entanglement as ent
from . import teleport as tp
from .spinmodel import ModelParams
from .verify import run_all

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_NONCONVERGENCE = 0, 1, 2, 3
THREADS_ENV = "XYCHAIN_THREADS"

QUANTITIES = ("concurrence", "fef", "max_fidelity", "ent_fidelity", "t1", "t2",
              "partial_fidelity")
SWEEP_VARS = ("eta", "gamma", "T", "xi")


class UsageError(Exception):
    pass


class NonConvergence(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threads():
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}")


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return repr(float(x))


def _record(gamma, eta, J, T, quantity, value, stderr=None, xi=None):
    rec = {"gamma": gamma, "eta": eta, "J": J, "T": T, "quantity": quantity, "value": value}
    if stderr is not None:
        rec["stderr"] = stderr
    if xi is not None:
        rec["xi"] = xi
    return rec


def _emit(records, args):
    if args.format == "json":
        text = json.dumps(records, indent=1) + "\n"
    else:
        cols = ["gamma", "eta", "J", "T", "quantity", "value"]
        for extra in ("stderr", "xi"):
            if any(extra in r for r in records):
                cols.append(extra)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in records:
            writer.writerow([r["quantity"] if c == "quantity" else _fmt(r.get(c)) for c in cols])
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _temperature(args, J):
    if args.beta is not None:
        if args.beta <= 0:
            raise UsageError("--beta must be positive")
        return 1.0 / args.beta
    if args.temp is None:
        raise UsageError("one of --temp or --beta is required")
    if args.temp <= 0:
        raise UsageError("--temp must be positive")
    return args.temp


def _check_gamma(g):
    if not -1.0 <= g <= 1.0:
        raise UsageError(f"gamma must lie in [-1, 1], got {g}")


def _critical_value(result):
    if not result.converged:
        raise NonConvergence("critical temperature bracket did not close")
    return result.value


def _quantity(p, name, xi):
    if name == "concurrence":
        return ent.thermal_concurrence_closed(p)
    if name == "fef":
        return ent.fef_closed(p)
    if name == "max_fidelity":
        return tp.max_fidelity_closed(p)
    if name == "ent_fidelity":
        return tp.max_ent_fidelity_closed(p)
    if name == "partial_fidelity":
        return tp.partial_output_fidelity_closed(p, xi)
    if name == "t1":
        return _critical_value(crit.t1_critical(p.gamma, p.eta, p.J))
    if name == "t2":
        return _critical_value(crit.t2_critical(p.gamma, p.eta, p.J))
    raise UsageError(f"unknown quantity {name!r}")


def _evaluate_point(point):
    gamma, eta, J, T, xi, quantities = point
    p = ModelParams(J=J, gamma=gamma, eta=eta, T=T if T is not None else 1.0)
    rows = []
    for q in quantities:
        temp = None if q in ("t1", "t2") else T
        rows.append(_record(gamma, eta, J, temp, q, _quantity(p, q, xi),
                            xi=xi if q == "partial_fidelity" else None))
    return rows


def _run_points(points):
    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_evaluate_point, points))
    else:
        chunks = [_evaluate_point(pt) for pt in points]
    return [r for chunk in chunks for r in chunk]


# --- subcommands ------------------------------------------------------------

def cmd_eval(args):
    _check_gamma(args.gamma)
    T = _temperature(args, args.J)
    p = ModelParams(J=args.J, gamma=args.gamma, eta=args.eta, T=T)
    rows = [_record(args.gamma, args.eta, args.J, T, q, v) for q, v in (
        ("concurrence", ent.thermal_concurrence_closed(p)),
        ("fef", ent.fef_closed(p)),
        ("max_fidelity", tp.max_fidelity_closed(p)),
        ("ent_fidelity", tp.max_ent_fidelity_closed(p)),
        ("useful", tp.useful_for_teleportation(p)),
    )]
    _emit(rows, args)
    return EXIT_OK


def cmd_sweep(args):
    quantities = [q.strip() for q in args.quantities.split(",") if q.strip()]
    bad = [q for q in quantities if q not in QUANTITIES]
    if bad:
        raise UsageError(f"unknown quantities: {', '.join(bad)}")
    if args.steps < 2 or not args.start < args.stop:
        raise UsageError("sweep needs steps >= 2 and start < stop")
    if args.var == "T" and {"t1", "t2"} & set(quantities):
        raise UsageError("t1/t2 cannot be swept over T")
    if args.var == "xi" and set(quantities) - {"partial_fidelity"}:
        raise UsageError("only partial_fidelity depends on xi")

    needs_t = any(q not in ("t1", "t2") for q in quantities) and args.var != "T"
    T = _temperature(args, args.J) if needs_t else None
    base = {"gamma": args.gamma, "eta": args.eta, "T": T, "xi": args.xi}
    points = []
    for v in np.linspace(args.start, args.stop, args.steps):
        vals = dict(base, **{args.var: float(v)})
        _check_gamma(vals["gamma"])
        if vals["T"] is not None and vals["T"] <= 0:
            raise UsageError("temperatures must be positive")
        points.append((vals["gamma"], vals["eta"], args.J, vals["T"], vals["xi"], quantities))
    _emit(_run_points(points), args)
    return EXIT_OK


def cmd_critical(args):
    _check_gamma(args.gamma)
    if args.steps < 2 or not args.eta_min < args.eta_max:
        raise UsageError("critical needs steps >= 2 and eta-min < eta-max")
    points = [(args.gamma, float(e), args.J, None, None, ("t1", "t2"))
              for e in np.linspace(args.eta_min, args.eta_max, args.steps)]
    _emit(_run_points(points), args)
    return EXIT_OK


def cmd_verify(args):
    checks = run_all(grid=args.grid, seed=args.seed, mc_samples=args.mc_samples,
                     mc_points=args.mc_points)
    for c in checks:
        print(c.line())
    ok = all(c.passed for c in checks)
    print("all checks passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_mc(args):
    _check_gamma(args.gamma)
    T = _temperature(args, args.J)
    p = ModelParams(J=args.J, gamma=args.gamma, eta=args.eta, T=T)
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    m, n = args.m, args.n
    if m is None or n is None:
        best = (4 - int(np.argmax(ent.bell_overlaps_closed(p)))) % 4
        m = best if m is None else m
        n = best if n is None else n
    est, err = tp.ent_fidelity_mc(p, m, n, samples=args.samples, seed=args.seed,
                                  workers=_threads())
    rows = [_record(args.gamma, args.eta, args.J, T, f"ent_fidelity_mc(m={m},n={n})", est,
                    stderr=err),
            _record(args.gamma, args.eta, args.J, T, "ent_fidelity", tp.max_ent_fidelity_closed(p))]
    _emit(rows, args)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="xychain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def point_args(sp, need_eta=True):
        sp.add_argument("--gamma", type=float, default=0.0)
        if need_eta:
            sp.add_argument("--eta", type=float, default=0.0)
        sp.add_argument("--J", type=float, default=1.0)

    def temp_args(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--temp", type=float)
        g.add_argument("--beta", type=float)

    def out_args(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output")

    sp = sub.add_parser("eval", help="all figures of merit at one parameter point")
    point_args(sp); temp_args(sp); out_args(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("sweep", help="one quantity family along a parameter line")
    point_args(sp); temp_args(sp); out_args(sp)
    sp.add_argument("--var", choices=SWEEP_VARS, required=True)
    sp.add_argument("--start", type=float, required=True)
    sp.add_argument("--stop", type=float, required=True)
    sp.add_argument("--steps", type=int, default=200)
    sp.add_argument("--xi", type=float, default=math.pi / 4)
    sp.add_argument("--quantities", default="concurrence,fef,max_fidelity")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("critical", help="T1 and T2 critical temperatures against eta")
    point_args(sp, need_eta=False); out_args(sp)
    sp.add_argument("--eta-min", type=float, default=0.0)
    sp.add_argument("--eta-max", type=float, default=2.0)
    sp.add_argument("--steps", type=int, default=200)
    sp.set_defaults(func=cmd_critical)

    sp = sub.add_parser("verify", help="run the oracle cross-checks")
    sp.add_argument("--grid", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--mc-samples", type=int, default=1_000_000)
    sp.add_argument("--mc-points", type=int, default=3)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mc-fidelity", help="Monte Carlo two-qubit teleportation fidelity")
    point_args(sp); temp_args(sp); out_args(sp)
    sp.add_argument("--m", type=int, choices=range(4))
    sp.add_argument("--n", type=int, choices=range(4))
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=42)
    sp.set_defaults(func=cmd_mc)
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"xychain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergence, crit.CriticalityError, RuntimeError) as exc:
        print(f"xychain: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
