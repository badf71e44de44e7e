"""Command-line front end.

Every subcommand prints ``key=value`` lines (or one JSON object with
``--json``). Exit status: 0 on success, 1 on a domain/runtime error, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import __version__
from .design import (
    DesignFamily,
    DesignProblem,
    Symmetry,
    default_bounds,
    degeneracy_study,
    design,
)
from .ga import GaConfig
from .response import (
    DomainError,
    Family,
    FoFilterParams,
    FoSecondOrderBpParams,
    ModeError,
    PoleOnAxisError,
    peak_closed_form,
    q_factor,
)
from .svg import render_svg
from .sweep import (
    ExportError,
    FrequencyGrid,
    NoInteriorPeakError,
    ResponseSample,
    default_grid,
    find_peak,
    surface,
    sweep,
    write_csv,
)

DEFAULT_OMEGA0 = 1.5


class UsageError(Exception):
    pass


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return v


def _float_list(text: str) -> list[float]:
    return [_finite(t) for t in text.split(",") if t.strip()]


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _add_filter_args(p: argparse.ArgumentParser, defaults: bool = False):
    p.add_argument("--family", choices=["bp", "bs", "bp2"], required=not defaults, default="bp" if defaults else None,
                   help="bp: b s^beta/(s^alpha+a); bs: its reciprocal; bp2: d s^alpha/(s^2alpha+2a s^alpha+b)")
    p.add_argument("--a", type=_finite, required=not defaults, default=1.0 if defaults else None,
                   help="pole coefficient a, (rad/s)^alpha" + (" (default 1)" if defaults else ""))
    p.add_argument("--b", type=_finite, required=not defaults, default=1.0 if defaults else None,
                   help="zero/gain coefficient b" + (" (default 1)" if defaults else ""))
    p.add_argument("--beta", type=_finite, default=0.5 if defaults else None,
                   help="numerator order beta (bp/bs)" + (" (default 0.5)" if defaults else ""))
    p.add_argument("--alpha", type=_finite, default=None,
                   help="denominator order alpha; omitted means alpha = 2*beta (bp2: base order)")
    p.add_argument("--d", type=_finite, default=1.0, help="numerator gain d (bp2 only, default 1)")
    p.add_argument("--allow-unstable", action="store_true", help="permit alpha >= 2 (bp/bs)")


def _filter_from_args(args):
    if args.family == "bp2":
        if args.alpha is None:
            raise UsageError("--alpha is required for --family bp2")
        return FoSecondOrderBpParams(args.a, args.b, args.d, args.alpha)
    if args.beta is None:
        raise UsageError("--beta is required for --family bp/bs")
    fam = Family.BANDSTOP if args.family == "bs" else Family.BANDPASS
    alpha = 2.0 * args.beta if args.alpha is None else args.alpha
    return FoFilterParams(args.a, args.b, alpha, args.beta, fam, args.allow_unstable)


def _add_grid_args(p: argparse.ArgumentParser):
    p.add_argument("--omega-min", type=_finite, default=None, help="lowest frequency, rad/s (default omega0/1000)")
    p.add_argument("--omega-max", type=_finite, default=None, help="highest frequency, rad/s (default omega0*1000)")
    p.add_argument("--points", type=int, default=2000, help="log-spaced grid points (default 2000)")


def _grid_from_args(args, omega0: float = DEFAULT_OMEGA0) -> FrequencyGrid:
    g = default_grid(omega0, args.points)
    return FrequencyGrid(
        g.omega_min if args.omega_min is None else args.omega_min,
        g.omega_max if args.omega_max is None else args.omega_max,
        args.points,
    )


def _add_ga_args(p: argparse.ArgumentParser):
    d = GaConfig()
    p.add_argument("--population", type=int, default=d.population_size, help=f"population size (default {d.population_size})")
    p.add_argument("--crossover", type=_finite, default=d.crossover_fraction, help=f"crossover fraction (default {d.crossover_fraction})")
    p.add_argument("--mutation", type=_finite, default=d.mutation_fraction, help=f"mutation fraction (default {d.mutation_fraction})")
    p.add_argument("--generations", type=int, default=d.max_generations, help=f"max generations (default {d.max_generations})")
    p.add_argument("--elite", type=int, default=d.elite_count, help=f"elite count (default {d.elite_count})")
    p.add_argument("--stall-generations", type=int, default=d.stall_generations, help=f"stall window (default {d.stall_generations})")
    p.add_argument("--stall-tolerance", type=_finite, default=d.stall_tolerance, help=f"relative stall tolerance (default {d.stall_tolerance:g})")
    p.add_argument("--seeds", type=_int_list, default=[1, 2, 3, 4, 5], help="comma-separated RNG seeds (default 1,2,3,4,5)")


def _ga_from_args(args) -> GaConfig:
    try:
        return GaConfig(
            population_size=args.population,
            crossover_fraction=args.crossover,
            mutation_fraction=args.mutation,
            max_generations=args.generations,
            elite_count=args.elite,
            stall_generations=args.stall_generations,
            stall_tolerance=args.stall_tolerance,
        )
    except ValueError as exc:
        raise UsageError(f"invalid GA configuration: {exc}")


def _params_dict(p) -> dict:
    if isinstance(p, FoSecondOrderBpParams):
        return {"a": p.a, "b": p.b, "d": p.d, "alpha": p.alpha}
    return {"family": p.family.value, "a": p.a, "b": p.b, "alpha": p.alpha, "beta": p.beta}


def _emit(out, record: dict, as_json: bool):
    if as_json:
        out.write(json.dumps(record, sort_keys=False) + "\n")
        return
    for k, v in record.items():
        if isinstance(v, list):
            for i, item in enumerate(v):
                if isinstance(item, dict):
                    item = " ".join(f"{ik}={_fmt(iv)}" for ik, iv in item.items())
                out.write(f"{k}[{i}]={item}\n")
        else:
            out.write(f"{k}={_fmt(v)}\n")


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _peak_fields(filt, omega0: float) -> dict:
    if isinstance(filt, FoFilterParams) and filt.is_symmetric:
        rep = peak_closed_form(filt)
    else:
        notch = isinstance(filt, FoFilterParams) and filt.family is Family.BANDSTOP
        try:
            rep = find_peak(sweep(filt, default_grid(omega0)), notch=notch)
        except NoInteriorPeakError:
            return {"omega_m": math.nan, "omega_m_method": "none"}
    return {"omega_m": rep.omega_m, "peak_magnitude": rep.peak_magnitude, "omega_m_method": rep.method.value}


def _write_sweep(samples_or_series, path: str, fmt: str | None, title: str):
    fmt = fmt or ("svg" if path.lower().endswith(".svg") else "csv")
    if fmt == "svg":
        render_svg(samples_or_series, path, title=title)
    else:
        write_csv(samples_or_series, path)


def cmd_qfactor(args, out):
    filt = _filter_from_args(args)
    rec = _params_dict(filt)
    rec["omega0"] = args.omega0
    rec["q"] = q_factor(filt, args.omega0)
    rec.update(_peak_fields(filt, args.omega0))
    _emit(out, rec, args.json)


def cmd_response(args, out):
    filt = _filter_from_args(args)
    samples = sweep(filt, _grid_from_args(args))
    _write_sweep(samples, args.out, args.format, args.title or "Magnitude response")
    _emit(out, {"out": args.out, "samples": len(samples),
                "pole_hits": sum(s.pole_hit for s in samples)}, args.json)


def cmd_peak(args, out):
    filt = _filter_from_args(args)
    rec = _params_dict(filt)
    if isinstance(filt, FoFilterParams) and filt.is_symmetric:
        cf = peak_closed_form(filt)
        rec["closed_form_omega_m"] = cf.omega_m
        rec["closed_form_magnitude"] = cf.peak_magnitude
    notch = isinstance(filt, FoFilterParams) and filt.family is Family.BANDSTOP
    grid = _grid_from_args(args)
    rep = find_peak(sweep(filt, grid), notch=notch)
    rec["grid_omega_m"] = rep.omega_m
    rec["grid_magnitude"] = rep.peak_magnitude
    rec["kind"] = "notch" if notch else "peak"
    _emit(out, rec, args.json)


def _problem_from_args(args) -> DesignProblem:
    fam = DesignFamily(args.family)
    sym = Symmetry.ASYMMETRIC if args.asymmetric else Symmetry.SYMMETRIC
    if fam is DesignFamily.SECOND_ORDER_BANDPASS:
        names = ["a", "b", "d", "alpha"]
    elif sym is Symmetry.SYMMETRIC:
        names = ["a", "b", "beta"]
    else:
        names = ["a", "b", "alpha", "beta"]
    guard = not args.no_stability_guard
    bounds = default_bounds(fam, sym, guard)
    for i, n in enumerate(names):
        lo = getattr(args, f"{n}_min", None)
        hi = getattr(args, f"{n}_max", None)
        if lo is not None or hi is not None:
            try:
                bounds = bounds.replace(i, lower=lo, upper=hi)
            except ValueError as exc:
                raise UsageError(f"bad bounds for {n}: {exc}")
    return DesignProblem(fam, sym, args.omega0, bounds, guard)


def cmd_design(args, out):
    problem = _problem_from_args(args)
    config = _ga_from_args(args)
    if not args.seeds:
        raise UsageError("--seeds must list at least one seed")
    rep = design(problem, config, args.seeds)
    rec = {"family": problem.family.value, "symmetry": problem.symmetry.value, "omega0": problem.omega0}
    rec.update({k: v for k, v in _params_dict(rep.params).items() if k != "family"})
    rec["q"] = rep.q
    rec["omega_m"] = rep.omega_m
    rec["best_seed"] = rep.best_seed
    rec["generations"] = rep.result.generations_run
    rec["seed_results"] = [{"seed": s, "q": q} for s, q in rep.seed_results]
    if args.out:
        samples = sweep(rep.params, _grid_from_args(args, problem.omega0))
        _write_sweep(samples, args.out, args.format,
                     f"Optimised {problem.symmetry.value} {problem.family.value}, Q={rep.q:.6g}")
        rec["out"] = args.out
    _emit(out, rec, args.json)


def cmd_surface(args, out):
    base = _filter_from_args(args)
    grid = _grid_from_args(args)
    surf = surface(base, args.sweep, args.values, grid)
    fmt = args.format or ("svg" if args.out.lower().endswith(".svg") else "csv")
    if fmt == "svg":
        series = []
        w = grid.omegas()
        for v, row in zip(surf.param_values, surf.values_db):
            series.append((f"{args.sweep}={v:g}", [ResponseSample(float(x), 10 ** (d / 20), float(d), math.nan)
                                                    for x, d in zip(w, row) if math.isfinite(d)]))
        render_svg(series, args.out, title=args.title or f"Effect of {args.sweep}")
    else:
        write_csv(surf, args.out)
    peaks = surf.row_argmax_omega() if not (isinstance(base, FoFilterParams) and base.family is Family.BANDSTOP) else None
    rec = {"out": args.out, "rows": len(surf.param_values), "columns": grid.points}
    if peaks is not None:
        rec["row_peak_omega"] = [float(p) for p in peaks]
    _emit(out, rec, args.json)


def cmd_degeneracy(args, out):
    config = _ga_from_args(args)
    if len(args.seeds) < 3:
        raise UsageError("degeneracy needs at least 3 seeds")
    bounds = default_bounds(DesignFamily.SECOND_ORDER_BANDPASS)
    if args.a_min is not None:
        try:
            bounds = bounds.replace(0, lower=args.a_min)
        except ValueError as exc:
            raise UsageError(f"bad --a-min: {exc}")
    rep = degeneracy_study(config, args.omega0, args.seeds, bounds)
    rec = {"omega0": rep.omega0, "median_a": rep.median_a, "threshold": rep.threshold,
           "degenerate": rep.degenerate,
           "seed_results": [{"seed": s, "a": p.a, "b": p.b, "d": p.d, "alpha": p.alpha, "q": q}
                            for s, p, q in rep.per_seed]}
    _emit(out, rec, args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foqfilter",
        description="Fractional-order band-pass/band-stop filters: Q-factors, sweeps and GA design.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="print one JSON object instead of key=value lines")

    p = sub.add_parser("qfactor", help="Q at a centre frequency (gain at omega0; 1/gain for bs)")
    _add_filter_args(p)
    p.add_argument("--omega0", type=_finite, required=True, help="centre frequency, rad/s")
    common(p)
    p.set_defaults(func=cmd_qfactor)

    p = sub.add_parser("response", help="frequency sweep to CSV or SVG (magnitude in dB, phase in degrees)")
    _add_filter_args(p)
    _add_grid_args(p)
    p.add_argument("--out", required=True, help="output path (.csv or .svg)")
    p.add_argument("--format", choices=["csv", "svg"], default=None, help="override format inferred from --out")
    p.add_argument("--title", default=None)
    common(p)
    p.set_defaults(func=cmd_response)

    p = sub.add_parser("peak", help="peak/notch frequency (rad/s): closed form when symmetric, plus grid argmax")
    _add_filter_args(p)
    _add_grid_args(p)
    common(p)
    p.set_defaults(func=cmd_peak)

    p = sub.add_parser("design", help="maximise Q at omega0 with the real-coded GA over several seeds")
    p.add_argument("--family", choices=["bp", "bs", "bp2"], required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--symmetric", action="store_true", help="tie alpha = 2*beta (default)")
    g.add_argument("--asymmetric", action="store_true", help="search alpha and beta independently")
    p.add_argument("--omega0", type=_finite, default=DEFAULT_OMEGA0, help=f"centre frequency, rad/s (default {DEFAULT_OMEGA0})")
    p.add_argument("--no-stability-guard", action="store_true", help="allow alpha >= 2 during the search")
    for n in ("a", "b", "d", "alpha", "beta"):
        p.add_argument(f"--{n}-min", type=_finite, default=None, help=f"lower bound for {n}")
        p.add_argument(f"--{n}-max", type=_finite, default=None, help=f"upper bound for {n}")
    _add_ga_args(p)
    _add_grid_args(p)
    p.add_argument("--out", default=None, help="optional sweep of the optimised filter (.csv or .svg)")
    p.add_argument("--format", choices=["csv", "svg"], default=None)
    common(p)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("surface", help="parametric sweep of one filter parameter (long-format CSV, or SVG)")
    _add_filter_args(p, defaults=True)
    p.add_argument("--sweep", required=True, choices=["a", "b", "d", "alpha", "beta"], help="parameter to vary")
    p.add_argument("--values", type=_float_list, required=True, help="comma-separated parameter values")
    _add_grid_args(p)
    p.add_argument("--out", required=True, help="output path (.csv or .svg)")
    p.add_argument("--format", choices=["csv", "svg"], default=None)
    p.add_argument("--title", default=None)
    common(p)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("degeneracy", help="optimise the fractional second-order band-pass and inspect a")
    p.add_argument("--omega0", type=_finite, default=DEFAULT_OMEGA0, help=f"centre frequency, rad/s (default {DEFAULT_OMEGA0})")
    p.add_argument("--a-min", type=_finite, default=None, help="lower bound for a (default 0)")
    _add_ga_args(p)
    common(p)
    p.set_defaults(func=cmd_degeneracy)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ModeError, PoleOnAxisError, NoInteriorPeakError, ExportError, ValueError, RuntimeError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
