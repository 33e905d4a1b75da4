"""Command-line entry point: ``recipwalk {generate,mfpt,spectrum,verify,scaling}``."""
from __future__ import annotations

import argparse
import sys

from . import closed_form, export, spectral
from .experiments import CLOSED, SOLVE, run_scaling_fit, run_verify_suite
from .montecarlo import SimConfig, simulate
from .network import NetworkConfig, build_weighted
from .walk import assemble, fundamental_entry_sum, solve_trapping_times


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(args, default: str) -> str:
    if getattr(args, "json", False):
        return "json"
    return args.format or default


def cmd_generate(args) -> int:
    net = build_weighted(NetworkConfig(args.g, args.theta))
    if _fmt(args, "csv") == "json":
        _emit(export.dumps_json(export.network_json(net)), args.out)
    elif args.table == "nodes":
        _emit(export.nodes_csv(net), args.out)
    else:
        _emit(export.arcs_csv(net), args.out)
    return 0


def cmd_mfpt(args) -> int:
    fmt = _fmt(args, "json")
    if args.method == "closed":
        doc = closed_form.breakdown(args.g, args.theta).to_json_dict()
        if fmt == "csv":
            _emit("\n".join(f"{k},{v}" for k, v in doc.items()) + "\n", args.out)
        else:
            _emit(export.dumps_json(doc), args.out)
        return 0

    net = build_weighted(NetworkConfig(args.g, args.theta))
    if args.method == "mc":
        sim = simulate(net, SimConfig(args.walkers, args.seed))
        if fmt == "csv":
            _emit(export.mfpt_csv(sim.to_mfpt_report()), args.out)
        else:
            _emit(export.dumps_json(sim.to_json_dict()), args.out)
        if not sim.valid:
            _err(f"{sim.truncated_walks} walks hit max_steps; run is invalid")
            return 1
        return 0

    system = assemble(net)
    report = fundamental_entry_sum(system) if args.method == "entry_sum" else solve_trapping_times(system)
    if fmt == "csv":
        _emit(export.mfpt_csv(report), args.out)
    else:
        _emit(export.dumps_json(export.mfpt_json(report)), args.out)
    return 0


def cmd_spectrum(args) -> int:
    spec = spectral.spectrum(args.g, args.theta)
    deviation = None
    if args.verify:
        deviation = spectral.spectrum_deviation(args.g, args.theta)
    if _fmt(args, "csv") == "json":
        doc = export.spectrum_json(spec)
        if deviation is not None:
            doc["max_deviation"] = deviation
        _emit(export.dumps_json(doc), args.out)
    else:
        _emit(export.spectrum_csv(spec), args.out)
    if deviation is not None:
        tol = args.tol if args.tol is not None else 1e-8
        _err(f"max deviation from dense eigensolve: {deviation:.3e} (tol {tol:g})")
        return 0 if deviation <= tol else 1
    return 0


def cmd_verify(args) -> int:
    summary = run_verify_suite(
        args.g,
        args.theta,
        tol=args.tol if args.tol is not None else 1e-10,
        walkers=args.walkers,
        seed=args.seed,
        inject_fault=args.inject_fault,
        log=_err if args.verbose else None,
    )
    if _fmt(args, "table") == "json":
        _emit(export.dumps_json(summary.to_json_dict()), args.out)
    else:
        _emit(summary.table() + "\n", args.out)
    _err("verify: " + ("all checks passed" if summary.passed else "FAILED"))
    return 0 if summary.passed else 1


def cmd_scaling(args) -> int:
    fit = run_scaling_fit(args.theta, args.g_min, args.g, args.method)
    if _fmt(args, "csv") == "json":
        _emit(export.dumps_json(fit.to_json_dict()), args.out)
    else:
        _emit(export.scaling_csv(fit), args.out)
    _err(
        f"theta={fit.theta:g}: successive slope {fit.successive_slope:.6f}, "
        f"least squares {fit.fitted_exponent:.6f}, predicted {fit.predicted_exponent:.6f}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="recipwalk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, g_default=None, theta_nargs=None, formats=("csv", "json")):
        p.add_argument("--g", type=int, required=g_default is None, default=g_default)
        if theta_nargs:
            p.add_argument("--theta", type=float, nargs=theta_nargs, default=[0.5, 1.0, 2.0])
        else:
            p.add_argument("--theta", type=float, default=1.0)
        p.add_argument("--format", choices=formats)
        p.add_argument("--json", action="store_true", help="shorthand for --format json")
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--tol", type=float)

    p = sub.add_parser("generate", help="export the weighted network")
    common(p)
    p.add_argument("--table", choices=("arcs", "nodes"), default="arcs")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("mfpt", help="mean first-passage time to the hub")
    common(p)
    p.add_argument("--method", choices=("solve", "entry_sum", "closed", "mc"), default="solve")
    p.add_argument("--walkers", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_mfpt)

    p = sub.add_parser("spectrum", help="eigenvalues of I - R̄ by decimation")
    common(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="cross-check all methods")
    common(p, g_default=4, theta_nargs="+", formats=("table", "json"))
    p.add_argument("--walkers", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scaling", help="fit the MFPT power law")
    common(p, g_default=12)
    p.add_argument("--g-min", type=int)
    p.add_argument("--method", choices=(CLOSED, SOLVE), default=CLOSED)
    p.set_defaults(func=cmd_scaling)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        _err(f"error: {exc}")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
