"""Command-line interface: interval construction, simulation, curves.

Exit codes: 0 success, 2 usage error, 3 unreadable/malformed input data,
4 numerical failure (degenerate variance, unbracketed endpoint, ...).
"""
from __future__ import annotations

import argparse
import csv
import sys
from typing import Optional

from .calibration import SignificanceLevel
from .core import Sample, VariantKind, point_estimate
from .errors import FileError, LorenzELError, SchemaError
from .income import curve, load_csv, write_curve_csv
from .intervals import invert
from .populations import ChiSquare, SeedSpec, SkewNormal, Weibull
from .simulation import ExperimentConfig, run_experiment, write_results_csv

_METHOD_NAMES = [k.value for k in VariantKind]


def _parse_t_spec(spec: str) -> list[float]:
    """Grid spec: 'a..b:step' (step optional, default 0.1) or 'a,b,c'."""
    spec = spec.strip()
    try:
        if ".." in spec:
            rng, _, step_s = spec.partition(":")
            a_s, _, b_s = rng.partition("..")
            a, b = float(a_s), float(b_s)
            step = float(step_s) if step_s else 0.1
            if step <= 0 or b < a:
                raise ValueError
            count = int(round((b - a) / step)) + 1
            ts = [round(a + i * step, 12) for i in range(count)]
            ts = [t for t in ts if t <= b + 1e-12]
        else:
            ts = [round(float(p), 12) for p in spec.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad t spec {spec!r}")
    if not ts or not all(0.0 < t < 1.0 for t in ts):
        raise argparse.ArgumentTypeError(f"t values must lie strictly in (0, 1): {spec!r}")
    return ts


def _parse_population(spec: str):
    """'weibull:1,2' | 'chisquare:3' | 'skewnormal:1,3,5'."""
    name, _, args_s = spec.strip().partition(":")
    try:
        args = [float(a) for a in args_s.split(",")] if args_s else []
        name = name.lower()
        if name == "weibull" and len(args) == 2:
            return Weibull(*args)
        if name in ("chisquare", "chisq") and len(args) == 1:
            return ChiSquare(*args)
        if name == "skewnormal" and len(args) == 3:
            return SkewNormal(*args)
    except (ValueError, LorenzELError):
        pass
    raise argparse.ArgumentTypeError(
        f"bad population {spec!r} (try weibull:1,2 chisquare:3 skewnormal:1,3,5)")


def _parse_alpha(spec: str) -> float:
    try:
        alpha = float(spec)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad alpha {spec!r}")
    if not 0.0 < alpha < 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie strictly in (0, 1), got {spec}")
    return alpha


def _parse_methods(spec: str) -> tuple:
    spec = spec.strip().lower()
    if spec == "none":
        return ()
    if spec == "all":
        return tuple(VariantKind)
    out = []
    for part in spec.split(","):
        part = part.strip()
        if part not in _METHOD_NAMES:
            raise argparse.ArgumentTypeError(
                f"unknown method {part!r} (choose from {', '.join(_METHOD_NAMES)} | all | none)")
        out.append(VariantKind(part))
    return tuple(dict.fromkeys(out))


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorenzel",
        description="Empirical-likelihood confidence intervals for generalized "
                    "Lorenz ordinates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ci = sub.add_parser("ci", help="intervals for ordinates of an income CSV")
    ci.add_argument("--input", required=True, help="CSV file of incomes")
    ci.add_argument("--value-column", required=True)
    ci.add_argument("--group-column", default=None)
    ci.add_argument("--group", default=None, help="keep only rows with this label")
    ci.add_argument("--t", type=_parse_t_spec, default=_parse_t_spec("0.1..0.9:0.1"),
                    help="abscissae: 'a..b:step' or comma list (default 0.1..0.9:0.1)")
    ci.add_argument("--methods", type=_parse_methods, default=tuple(VariantKind),
                    help="comma list of el,ael,tel,tael | all | none (default all)")
    ci.add_argument("--alpha", type=_parse_alpha, default=0.05)
    ci.add_argument("--output", default="-", help="output CSV path, '-' = stdout")
    ci.add_argument("--raw", action="store_true", help="full float precision")

    sim = sub.add_parser("simulate", help="Monte-Carlo bias/MSE/coverage study")
    sim.add_argument("--population", type=_parse_population,
                     default=Weibull(1.0, 2.0),
                     help="weibull:a,b | chisquare:k | skewnormal:loc,scale,shape")
    sim.add_argument("--n", default="25,50,100,150,300,500",
                     help="comma list of sample sizes")
    sim.add_argument("--t", type=_parse_t_spec, default=_parse_t_spec("0.1..0.9:0.1"))
    sim.add_argument("--reps", type=int, default=10_000)
    sim.add_argument("--alpha", type=_parse_alpha, default=0.05)
    sim.add_argument("--methods", type=_parse_methods, default=tuple(VariantKind))
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--output", default="-")
    sim.add_argument("--raw", action="store_true")
    sim.add_argument("--quiet", action="store_true", help="suppress progress lines")

    cur = sub.add_parser("curve", help="empirical Lorenz curve points")
    cur.add_argument("--input", required=True)
    cur.add_argument("--value-column", required=True)
    cur.add_argument("--group-column", default=None)
    cur.add_argument("--groups", default=None,
                     help="comma list of group labels (default: whole table only)")
    cur.add_argument("--grid-step", type=float, default=0.01)
    cur.add_argument("--output-dir", default=".")
    cur.add_argument("--raw", action="store_true")

    return parser


def _cmd_ci(args) -> int:
    table = load_csv(args.input, args.value_column, args.group_column)
    if not args.methods:
        print("lorenzel ci: at least one method is required", file=sys.stderr)
        return 2
    if args.group is not None:
        if args.group_column is None:
            print("lorenzel ci: --group requires --group-column", file=sys.stderr)
            return 2
        table = table.filter(args.group)
    if table.n < 2:
        raise FileError(f"{args.input}: need at least 2 usable rows, got {table.n}")
    smp = table.sample()
    level = SignificanceLevel(args.alpha)
    prec = None if args.raw else 4

    def fmt(x: float) -> str:
        return repr(float(x)) if prec is None else f"{x:.{prec}f}"

    fh, own = _open_out(args.output)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "estimate", "method", "lower", "upper", "length"])
        for t in args.t:
            est = point_estimate(smp, t)
            for kind in args.methods:
                ci = invert(kind, smp, t, level)
                writer.writerow([f"{t:.10g}", fmt(est), kind.value,
                                 fmt(ci.lower), fmt(ci.upper), fmt(ci.length)])
    finally:
        if own:
            fh.close()
    return 0


def _cmd_simulate(args) -> int:
    cfg = ExperimentConfig(
        population=args.population,
        n_grid=tuple(int(x) for x in args.n.split(",")),
        t_grid=tuple(args.t),
        reps=args.reps,
        alpha=args.alpha,
        methods=args.methods,
        seed=SeedSpec(master_seed=args.seed),
    )
    progress = None
    if not args.quiet:
        def progress(done, total, res):
            meth = res.method.value if res.method else "point"
            print(f"cell {done}/{total}: n={res.n} t={res.t:g} method={meth}",
                  file=sys.stderr, flush=True)
    results = run_experiment(cfg, workers=args.workers, progress=progress)
    write_results_csv(results, cfg, args.output, precision=None if args.raw else 4)
    return 0


def _sanitize(label: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in str(label)) or "group"


def _cmd_curve(args) -> int:
    import os

    table = load_csv(args.input, args.value_column, args.group_column)
    step = args.grid_step
    if not 0.0 < step < 1.0:
        print("lorenzel curve: --grid-step must lie in (0, 1)", file=sys.stderr)
        return 2
    grid = []
    k = 1
    while (t := round(k * step, 12)) < 1.0:
        grid.append(t)
        k += 1
    jobs = [("ALL", table)]
    if args.groups is not None:
        if args.group_column is None:
            print("lorenzel curve: --groups requires --group-column", file=sys.stderr)
            return 2
        for label in args.groups.split(","):
            label = label.strip()
            jobs.append((label, table.filter(label)))
    prec = None if args.raw else 4
    os.makedirs(args.output_dir, exist_ok=True)
    for label, sub in jobs:
        if sub.n < 2:
            raise FileError(f"group {label!r}: need at least 2 usable rows, got {sub.n}")
        pts = curve(sub.sample(), grid)
        path = os.path.join(args.output_dir, f"curve_{_sanitize(label)}.csv")
        write_curve_csv(pts, path, precision=prec)
        print(path)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ci":
            return _cmd_ci(args)
        if args.command == "simulate":
            return _cmd_simulate(args)
        return _cmd_curve(args)
    except (FileError, SchemaError) as exc:
        print(f"lorenzel {args.command}: {exc}", file=sys.stderr)
        return 3
    except LorenzELError as exc:
        print(f"lorenzel {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:  # bad config values surfaced past argparse
        print(f"lorenzel {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
