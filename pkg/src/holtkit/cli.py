"""Command-line interface: verify, bracket, catalog, simulate.

Exit codes: 0 success, 1 verification failure, 2 argument errors,
3 trajectory domain abort.  All stdout is deterministic for fixed
arguments; timing data only ever goes into the JSON report file.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import catalog, verify
from .dynamics import (
    PhasePoint,
    SimConfig,
    TrajectoryAborted,
    drift_report,
    format_trajectory,
    integrate,
)
from .parsing import ParseError, parse_expression
from .phasepoly import DomainError, PhasePoly, poisson_bracket

# default drift invariants per potential: its Hamiltonian plus the
# integrals conserved by it
_DEFAULT_INVARIANTS = {
    "V_h1": ("H_V_h1", "J_h1_3"),
    "V_h2": ("H_V_h2", "J_h2_4"),
    "V_h3": ("H_V_h3", "J_h3_6"),
    "V_h1_k": ("H_V_h1_k", "J_h1_3_k"),
    "V_h2_k": ("H_V_h2_k", "J_h2_4_k"),
    "V_h3_k": ("H_V_h3_k", "J_h3_6_k"),
    "U": ("H_U", "K2_3", "K3_4", "K4_6"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holtkit",
        description="Exact verification and numeric corroboration of "
                    "higher-order integrals of Holt-family potentials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the exact identity suite")
    p_verify.add_argument("--suite", default="full", choices=["full"],
                          help="which suite to run")
    p_verify.add_argument("--out", metavar="PATH",
                          help="write the JSON report here")

    p_bracket = sub.add_parser("bracket", help="Poisson bracket of two expressions")
    p_bracket.add_argument("first", help="catalog name or literal expression")
    p_bracket.add_argument("second", help="catalog name or literal expression")
    for k in ("k1", "k2", "k3"):
        p_bracket.add_argument(f"--{k}", metavar="RAT",
                               help=f"substitute {k} exactly (integer or p/q)")

    p_catalog = sub.add_parser("catalog", help="inspect the object catalog")
    cat_sub = p_catalog.add_subparsers(dest="catalog_command", required=True)
    cat_sub.add_parser("list", help="list all entries")
    p_show = cat_sub.add_parser("show", help="print one entry in canonical form")
    p_show.add_argument("name")

    p_sim = sub.add_parser("simulate", help="integrate a catalog potential")
    p_sim.add_argument("--potential", required=True,
                       help="catalog potential name (e.g. U, V_h1)")
    p_sim.add_argument("--start", required=True, metavar="X,Y,PX,PY",
                       help="initial phase-space point")
    p_sim.add_argument("--h", type=float, default=1e-3, help="time step")
    p_sim.add_argument("--t-end", type=float, default=1.0, dest="t_end")
    p_sim.add_argument("--integrator", default="leapfrog2",
                       choices=["leapfrog2", "composed4"])
    p_sim.add_argument("--y-min", type=float, default=1e-6, dest="y_min",
                       help="abort guard for the y > 0 domain")
    for k in ("k1", "k2", "k3"):
        p_sim.add_argument(f"--{k}", type=float, default=0.0)
    p_sim.add_argument("--out", metavar="PATH",
                       help="write the trajectory table here instead of stdout")
    p_sim.add_argument("--invariants", metavar="NAMES",
                       help="comma-separated catalog names to track "
                            "(default: Hamiltonian plus known integrals)")
    return parser


def _resolve_expression(text: str, parser: argparse.ArgumentParser) -> PhasePoly:
    try:
        entry = catalog.build(text)
    except KeyError:
        pass
    else:
        if not isinstance(entry.expression, PhasePoly):
            parser.error(f"{text} is a vector field, not a scalar expression")
        return entry.expression
    try:
        return parse_expression(text)
    except ParseError as exc:
        parser.error(f"cannot parse {text!r}: {exc}")


def _run_verify(args) -> int:
    report = verify.full_suite()
    sys.stdout.write(report.render_text())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json())
    return 0 if report.all_passed else 1


def _run_bracket(args, parser) -> int:
    f = _resolve_expression(args.first, parser)
    g = _resolve_expression(args.second, parser)
    result = poisson_bracket(f, g)
    subs = {}
    for k in ("k1", "k2", "k3"):
        raw = getattr(args, k)
        if raw is not None:
            try:
                subs[k] = Fraction(raw)
            except (ValueError, ZeroDivisionError):
                parser.error(f"--{k} must be an exact rational, got {raw!r}")
    if subs:
        result = result.substitute_params(**subs)
    print(result.render())
    return 0


def _run_catalog(args, parser) -> int:
    if args.catalog_command == "list":
        for name in catalog.names():
            e = catalog.build(name)
            print(f"{e.name}\t{e.kind}\t{e.momentum_order}\t{e.source}")
        return 0
    try:
        entry = catalog.build(args.name)
    except KeyError as exc:
        parser.error(str(exc))
    print(entry.expression.render())
    return 0


def _run_simulate(args, parser) -> int:
    try:
        potential = catalog.build(args.potential)
    except KeyError as exc:
        parser.error(str(exc))
    if potential.kind != "potential":
        parser.error(f"{args.potential} is not a potential")
    pieces = args.start.split(",")
    if len(pieces) != 4:
        parser.error("--start must be four comma-separated numbers x,y,px,py")
    try:
        start = PhasePoint(*(float(p) for p in pieces))
    except ValueError:
        parser.error(f"bad --start value {args.start!r}")
    try:
        cfg = SimConfig(h=args.h, t_end=args.t_end, integrator=args.integrator,
                        y_min=args.y_min, k1=args.k1, k2=args.k2, k3=args.k3)
    except ValueError as exc:
        parser.error(str(exc))

    if args.invariants:
        inv_names = [n.strip() for n in args.invariants.split(",") if n.strip()]
    else:
        inv_names = list(_DEFAULT_INVARIANTS.get(args.potential, ()))
    invariants = []
    for n in inv_names:
        try:
            e = catalog.build(n)
        except KeyError as exc:
            parser.error(str(exc))
        if not isinstance(e.expression, PhasePoly):
            parser.error(f"{n} is a vector field and cannot be tracked")
        invariants.append(e)

    try:
        traj = integrate(potential, start, cfg)
        table = format_trajectory(traj, invariants,
                                  k1=args.k1, k2=args.k2, k3=args.k3)
        report = drift_report(traj, invariants,
                              k1=args.k1, k2=args.k2, k3=args.k3)
    except TrajectoryAborted as exc:
        print(f"trajectory aborted: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(table)
    else:
        sys.stdout.write(table)
    print(f"samples: {report.samples}")
    for d in report.invariants:
        print(f"drift {d.name}: initial = {d.initial!r}, "
              f"max|dI|/max(|I0|,1) = {d.drift!r}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _run_verify(args)
    if args.command == "bracket":
        return _run_bracket(args, parser)
    if args.command == "catalog":
        return _run_catalog(args, parser)
    return _run_simulate(args, parser)


if __name__ == "__main__":
    sys.exit(main())
