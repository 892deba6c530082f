"""Command-line front end.

Every subcommand prints one :class:`~energyscale.output.OutputEnvelope` on
stdout. Exit status: 0 success, 1 domain error (structured error object on
stdout), 2 usage error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys

from . import allometry, chronometry, cone, netmetrics, scaling
from .errors import EnergyScaleError
from .output import OutputEnvelope, error_document

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _scale(args):
    model = scaling.ScalingModel(S=args.S, h=args.h, epsilon=args.epsilon)
    rows = scaling.generation_table(model)
    residual = scaling.nested_sum_check(model.S, model.h)
    results = {
        "n": model.n,
        "generation_total": model.generation_total,
        "nested_sum_residual": residual,
        "nested_sum_relative": residual / model.n,
        "generations": [vars(r) for r in rows],
    }
    return results, []


def _sum(args):
    G = scaling.geometric_sum_G(args.epsilon, args.h)
    mean = scaling.mean_energy_per_source(args.epsilon, args.h)
    limit = scaling.mean_energy_limit(args.epsilon)
    osc = scaling.oscillator_mean(args.epsilon, args.kT)
    return {
        "G": G,
        "mean_energy_per_source": mean,
        "mean_energy_limit": limit,
        "limit_gap": limit - mean,
        "oscillator_mean": osc,
        "oscillator_minus_mean": osc - mean,
    }, []


def _base(args):
    root = scaling.solve_optimal_base()
    return {
        "optimal_base": root,
        "abs_error_vs_e": abs(root - math.e),
        "balance_at_root": scaling.balance_ratio(root),
        "balance_at_2": scaling.balance_ratio(2.0),
    }, []


def _cone(args):
    geom = cone.ConeGeometry(S=args.S, D1=args.D1, L1=args.L1, theta1=args.theta1)
    rep = cone.section_report(geom, args.k)
    ratio = cone.entropy_ratio(geom.S, rep.k)
    return {
        "beta": geom.beta,
        "gamma": geom.gamma,
        "k": rep.k,
        "absorbing_volume": rep.absorbing_volume,
        "transmitting_volume": rep.transmitting_volume_ratio * geom.V1,
        "transmitting_volume_ratio": rep.transmitting_volume_ratio,
        "length_ratio": rep.length_ratio,
        "diameter_ratio": rep.diameter_ratio,
        "entropy_ratio": ratio,
        "entropy_ratio_decimal": float(ratio),
        "fractal_dimension": cone.fractal_dimension(geom.S, rep.k),
    }, []


def _stefan(args):
    heat = cone.heat_decomposition(args.E, args.dE, args.v, args.dv)
    return {
        "entropy_density_rate": cone.stefan_entropy_density_rate(args.E, args.T),
        "dQ": heat.dQ,
        "internal_part": heat.internal_part,
        "emergent_part": heat.emergent_part,
    }, []


def _allometry(args):
    scen = allometry.AllometryScenario(
        S=args.S, r_c=args.rc, l_c=args.lc, theta_c=args.thetac,
        h_range=tuple(range(args.h_min, args.h_max + 1)),
    )
    table = []
    for h in scen.h_range:
        v, theta = allometry.organism_volumes(scen, h)
        table.append({
            "h": h, "V_Y": v, "theta_M": theta,
            "compensated_invariant": allometry.compensated_invariant(scen, h),
        })
    fit = allometry.fit_exponent(scen)
    return {
        "closed_form_exponent": allometry.closed_form_exponent(scen.S),
        "a_hat": fit.a_hat,
        "residual": fit.residual,
        "raw_a_hat": fit.raw_a_hat,
        "raw_residual": fit.raw_residual,
        "capillary_invariance": allometry.capillary_invariance_check(scen, scen.h_range[0]),
        "organisms": table,
    }, []


def _report_results(rep):
    return {
        "n": rep.n,
        "path_length": rep.path_length,
        "clustering": rep.clustering,
        "entropy": rep.entropy,
        "e_gap": rep.e_gap,
    }


def _net(args):
    if args.direct:
        missing = [f"--{k}" for k in ("L", "C", "n") if getattr(args, k) is None]
        if missing:
            raise _UsageError(f"--direct requires {', '.join(missing)}")
        rep = netmetrics.network_report(args.L, args.C, args.n)
    else:
        if args.edges is None:
            raise _UsageError("net requires --edges FILE or --direct")
        g = netmetrics.read_edge_list(args.edges)
        rep = netmetrics.network_entropy(g, args.largest_component, args.workers)
    return _report_results(rep), list(rep.warnings)


def _mfp(args):
    return {"survival": netmetrics.mean_free_path_survival(args.x, args.l)}, []


def _date(args):
    if args.scenario is not None:
        scen = chronometry.load_dating_scenario(args.scenario)
    else:
        if args.Hprime is None or args.m is None:
            raise _UsageError("date requires --scenario FILE or both --Hprime and --m")
        scen = chronometry.DatingScenario(args.Hprime, args.m, args.time_unit or "ky")
    return {
        "H_prime": scen.H_prime,
        "m": scen.m,
        "age": chronometry.solve_age(scen),
        "time_unit": scen.time_unit,
    }, []


def _glotto(args):
    m = chronometry.glottochronology_check(args.divergence)
    return {"growth_rate": m, "growth_rate_percent": 100 * m}, []


def _value(args):
    if args.scenario is not None:
        kwargs = chronometry.load_value_scenario(args.scenario)
    else:
        kwargs = {k: getattr(args, k) for k in ("n1", "A", "m", "C", "L")}
        missing = [f"--{k}" for k, v in kwargs.items() if v is None]
        if missing:
            raise _UsageError(f"value requires {', '.join(missing)}")
    d = chronometry.network_value_delta(**kwargs)
    return {"n1": d.n1, "n2": d.n2, "A": d.A, "delta_H": d.delta_H}, []


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--quiet", action="store_true", help="print results only")

    parser = argparse.ArgumentParser(prog="energyscale", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help, allow_abbrev=False)
        p.set_defaults(func=func)
        return p

    p = add("scale", _scale, "generation table of nested clusters")
    p.add_argument("--S", type=float, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=1.0)

    p = add("sum", _sum, "geometric energy sum and mean energy per source")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--kT", type=float, default=1.0)

    add("base", _base, "solve for the balanced scaling factor")

    p = add("cone", _cone, "cone section scaling and the 4/3 ratio")
    p.add_argument("--S", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--D1", type=float, default=1.0)
    p.add_argument("--L1", type=float, default=1.0)
    p.add_argument("--theta1", type=float, default=1.0)

    p = add("stefan", _stefan, "entropy density rate and heat decomposition")
    p.add_argument("--E", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--dE", type=float, default=0.0)
    p.add_argument("--dv", type=float, default=1.0)
    p.add_argument("--v", type=float, default=1.0)

    p = add("allometry", _allometry, "allometric exponent from synthetic organisms")
    p.add_argument("--S", type=float, required=True)
    p.add_argument("--h-min", type=int, required=True)
    p.add_argument("--h-max", type=int, required=True)
    p.add_argument("--rc", type=float, default=1.0)
    p.add_argument("--lc", type=float, default=1.0)
    p.add_argument("--thetac", type=float, default=1.0)

    p = add("net", _net, "path length, clustering and network entropy")
    p.add_argument("--edges", metavar="FILE")
    p.add_argument("--largest-component", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--direct", action="store_true", help="use --L --C --n instead of a graph")
    p.add_argument("--L", type=float)
    p.add_argument("--C", type=float)
    p.add_argument("--n", type=float)

    p = add("mfp", _mfp, "mean-free-path survival probability")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--l", type=float, required=True)

    p = add("date", _date, "entropy dating")
    p.add_argument("--scenario", metavar="FILE")
    p.add_argument("--Hprime", type=float)
    p.add_argument("--m", type=float)
    p.add_argument("--time-unit")

    p = add("glotto", _glotto, "growth rate implied by lexical divergence")
    p.add_argument("--divergence", type=float, required=True)

    p = add("value", _value, "entropy-rate gain from added network members")
    p.add_argument("--scenario", metavar="FILE")
    p.add_argument("--m", type=float)
    p.add_argument("--C", type=float)
    p.add_argument("--L", type=float)
    p.add_argument("--n1", type=int)
    p.add_argument("--A", type=int)
    return parser


_NOT_INPUTS = {"command", "func", "format", "quiet"}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    inputs = {k: v for k, v in vars(args).items() if k not in _NOT_INPUTS and v is not None}
    try:
        results, warnings = args.func(args)
    except _UsageError as exc:
        parser.print_usage(stderr)
        stderr.write(f"energyscale {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except EnergyScaleError as exc:
        stderr.write(f"energyscale {args.command}: {exc.code}: {exc.message}\n")
        stdout.write(error_document(args.command, exc.as_dict(), args.format))
        return EXIT_DOMAIN
    except (OSError, UnicodeDecodeError) as exc:
        stderr.write(f"energyscale {args.command}: I/O error: {exc}\n")
        error = {"code": "IO_ERROR", "message": str(exc), "parameter": None}
        stdout.write(error_document(args.command, error, args.format))
        return EXIT_IO

    envelope = OutputEnvelope(args.command, inputs, results, warnings)
    stdout.write(envelope.render(args.format, args.quiet))
    return EXIT_OK


def main():
    sys.exit(run())
