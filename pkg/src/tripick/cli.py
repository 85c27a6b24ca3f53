"""Command-line front end: every capability of the library behind one
executable, emitting CSV or JSON suitable for scripting and plotting.

Subcommands
-----------
moments   exact moment table: numerator, denominator, reduced rational, decimal
dist      CDF/PDF values on a grid (or level-surface points with --levelset)
simulate  seeded Monte Carlo run: histogram, mean, Kolmogorov-Smirnov fit
table3    observed vs predicted |mean error| across sample sizes
verify    one-shot validation suite; exits 1 when any check fails

CSV output is numeric-only with a header row and newline-terminated lines;
reals carry 17 significant digits so a re-parse reproduces them bit for bit.
JSON output is one object with ``meta`` (command, seed, version) and
``rows``.  Every command is deterministic given its full flag set.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import __version__, analytic, montecarlo, oracle
from .montecarlo import SimConfig
from .oracle import QuadratureMethod, QuadratureSpec

__all__ = ["main", "verify_checks", "VerifyResult"]


# ---------------------------------------------------------------------------
# output plumbing


def _cell(value) -> str:
    """One CSV cell; floats get 17 significant digits (exact round trip)."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _json_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def _emit(args, command, header, rows, *, seed=None, summary_header=None, summary=None):
    if args.format == "json":
        obj = {
            "meta": {"command": command, "seed": seed, "version": __version__},
            "rows": [
                {key: _json_value(v) for key, v in zip(header, row)} for row in rows
            ],
        }
        if summary is not None:
            obj["summary"] = {
                key: _json_value(v) for key, v in zip(summary_header, summary)
            }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [",".join(header)]
        lines += [",".join(_cell(v) for v in row) for row in rows]
        if summary is not None:
            lines += ["", ",".join(summary_header)]
            lines.append(",".join(_cell(v) for v in summary))
        text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_moments(args) -> int:
    rows = []
    for n in range(1, args.max_n + 1):
        numerator = analytic.sequence_a279055(n)
        denominator = (n + 1) * math.factorial(n + 1) ** 2
        reduced = analytic.moment(n)
        rows.append([n, numerator, denominator, reduced, float(reduced)])
    _emit(args, "moments", ["n", "numerator", "denominator", "reduced", "decimal"], rows)
    return 0


def _dist_grid(grid_points: int) -> np.ndarray:
    cs = np.arange(1, grid_points + 1) / grid_points
    if 0.25 not in cs:
        cs = np.sort(np.append(cs, 0.25))
    return cs


def _cmd_dist(args) -> int:
    if args.levelset is not None:
        level = args.levelset
        mids = (np.arange(args.grid_points) + 0.5) / args.grid_points
        s, t = (g.ravel() for g in np.meshgrid(mids, mids, indexing="ij"))
        keep = np.abs(s + t - 1.0) > 1e-12
        s, t = s[keep], t[keep]
        r = oracle.slice_r(s, t, level)
        inside = (r >= 0.0) & (r <= 1.0)
        rows = [[rv, sv, tv] for rv, sv, tv in zip(r[inside], s[inside], t[inside])]
        _emit(args, "dist", ["r", "s", "t"], rows)
        return 0
    cs = _dist_grid(args.grid_points)
    cdf_vals = analytic.cdf(cs)
    pdf_vals = analytic.pdf(cs)
    if args.which == "cdf":
        header = ["c", "cdf"]
        rows = [[c, f] for c, f in zip(cs, cdf_vals)]
    elif args.which == "pdf":
        header = ["c", "pdf"]
        rows = [[c, d] for c, d in zip(cs, pdf_vals)]
    else:
        header = ["c", "cdf", "pdf"]
        rows = [[c, f, d] for c, f, d in zip(cs, cdf_vals, pdf_vals)]
    _emit(args, "dist", header, rows)
    return 0


def _cmd_simulate(args) -> int:
    config = SimConfig(seed=args.seed, sample_size=args.n, workers=args.workers)
    hist = montecarlo.empirical_pdf(config, args.bins)
    mean = montecarlo.estimate_mean(config)
    ks = montecarlo.ks_statistic(config)
    edges = hist.edges
    density = hist.density()
    analytic_avg = np.diff(analytic.cdf(edges)) * hist.bin_count
    rows = [
        [lo, hi, int(cnt), emp, ana]
        for lo, hi, cnt, emp, ana in zip(
            edges[:-1], edges[1:], hist.counts, density, analytic_avg
        )
    ]
    _emit(
        args,
        "simulate",
        ["bin_lo", "bin_hi", "count", "empirical_density", "analytic_density"],
        rows,
        seed=args.seed,
        summary_header=["mean", "ks_statistic", "ks_scaled"],
        summary=[mean, ks, ks * math.sqrt(config.sample_size)],
    )
    return 0


def _cmd_table3(args) -> int:
    sizes = args.sizes
    report = montecarlo.error_scaling_experiment(
        sizes, trials=args.trials, seed=args.seed, workers=args.workers
    )
    rows = [
        [row.n, row.observed_mean_abs_err, row.theoretical,
         row.observed_mean_abs_err / row.theoretical]
        for row in report.rows
    ]
    _emit(
        args,
        "table3",
        ["n", "observed_mean_abs_err", "theoretical", "ratio"],
        rows,
        seed=args.seed,
    )
    return 0


# ---------------------------------------------------------------------------
# verification suite


@dataclass(frozen=True)
class VerifyResult:
    name: str
    max_deviation: float
    tolerance: float
    passed: bool


def _check(name, deviations, tolerance) -> VerifyResult:
    worst = float(np.max(np.abs(np.asarray(deviations, dtype=float))))
    return VerifyResult(name, worst, tolerance, worst <= tolerance)


def verify_checks() -> list[VerifyResult]:
    """Run the whole cross-validation suite and report one result per check.

    Late-bound module access on purpose: the checks compare whatever
    ``analytic`` currently exposes against the independent numeric routes,
    so an injected defect in either side must surface here.
    """
    results = []

    upper_grid = np.linspace(0.26, 0.99, 10)
    nested = QuadratureSpec(QuadratureMethod.NESTED_ADAPTIVE, resolution=200, abs_tol=1e-8)
    devs = [
        oracle.cdf_quadrature(c, nested) - analytic.cdf(c) for c in upper_grid
    ]
    results.append(_check("cdf-vs-nested-quadrature", devs, 1e-6))

    lower_grid = np.linspace(0.02, 0.24, 10)
    volumes = oracle._indicator_volumes(lower_grid, 400)
    devs = volumes - np.array([analytic.cdf(c) for c in lower_grid])
    results.append(_check("cdf-vs-boole-grid", devs, 5e-3))

    fd_grid = np.concatenate(
        [np.linspace(0.01, 0.24, 25), np.linspace(0.26, 0.99, 25)]
    )
    # A wider step where the density is tiny: the difference quotient of a
    # CDF of size ~1 hits its roundoff floor with h = 1e-6 there.
    devs = [
        (oracle.pdf_fd(c, 5e-6 if c >= 0.9 else 1e-6) - analytic.pdf(c))
        / analytic.pdf(c)
        for c in fd_grid
    ]
    results.append(_check("pdf-vs-finite-difference", devs, 1e-6))

    bridge = QuadratureSpec(QuadratureMethod.NESTED_ADAPTIVE, resolution=200, abs_tol=1e-9)
    devs = [
        oracle.moment_quadrature(n, bridge) - float(analytic.moment(n))
        for n in range(8)
    ]
    results.append(_check("moment-bridge", devs, 1e-7))

    machin_grid = np.linspace(0.2501, 1.0, 1000)
    results.append(_check("machin-identity", analytic.machin_gap(machin_grid), 1e-12))

    continuity = [
        analytic.cdf(0.25 - 1e-8) - analytic.CDF_AT_QUARTER,
        analytic.cdf(0.25 + 1e-8) - analytic.CDF_AT_QUARTER,
    ]
    results.append(_check("cdf-branch-continuity", continuity, 1e-6))

    return results


def _cmd_verify(args) -> int:
    results = verify_checks()
    rows = [[r.name, r.max_deviation, r.tolerance, r.passed] for r in results]
    _emit(args, "verify", ["check", "max_deviation", "tolerance", "passed"], rows)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# argument parsing


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _bins_int(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("need at least 2 bins")
    return value


def _grid_int(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("need at least 2 grid points")
    return value


def _sample_count(text: str) -> int:
    value = int(float(text))
    if value < 100:
        raise argparse.ArgumentTypeError("need at least 100 samples")
    return value


def _seed_int(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _size_list(text: str) -> list[int]:
    try:
        sizes = [int(float(part)) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad size list: {exc}")
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _unit_float(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("level must lie in [0, 1]")
    return value


def _add_output_flags(parser):
    parser.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    parser.add_argument(
        "--out", default=None, metavar="PATH", help="write to PATH instead of stdout"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripick",
        description="Area statistics of a random triangle inscribed in a fixed triangle.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="exact moment table of the area ratio")
    p.add_argument("--max-n", type=_positive_int, default=7, help="highest moment order")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("dist", help="CDF/PDF grid values, or level-surface points")
    p.add_argument(
        "--grid-points", type=_grid_int, default=200, help="grid resolution on (0, 1]"
    )
    p.add_argument(
        "--which", choices=("cdf", "pdf", "both"), default="both", help="columns to emit"
    )
    p.add_argument(
        "--levelset",
        type=_unit_float,
        default=None,
        metavar="C",
        help="emit (r, s, t) points on the level surface Q = C instead",
    )
    _add_output_flags(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("simulate", help="seeded Monte Carlo histogram and fit summary")
    p.add_argument("--n", type=_sample_count, default=100_000, help="sample count")
    p.add_argument("--seed", type=_seed_int, default=0)
    p.add_argument("--bins", type=_bins_int, default=100)
    p.add_argument("--workers", type=_positive_int, default=1)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("table3", help="observed vs predicted |mean error| scaling")
    p.add_argument(
        "--sizes",
        type=_size_list,
        default=[100, 1_000, 10_000, 100_000, 1_000_000],
        help="comma-separated sample sizes (default caps at 1e6 for desk-scale runtime)",
    )
    p.add_argument("--trials", type=_positive_int, default=50)
    p.add_argument("--seed", type=_seed_int, default=0)
    p.add_argument("--workers", type=_positive_int, default=1)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_table3)

    p = sub.add_parser("verify", help="run all cross-checks; exit 1 on any failure")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
