"""Seed-reproducible sampling of the side parameters and the Monte Carlo
validation statistics for the area ratio Q.

Samples are drawn in fixed-size chunks of ``CHUNK_SIZE`` triples.  Chunk k
uses the PCG64 substream derived from ``SeedSequence(seed, spawn_key=(k,))``,
so the sample multiset is a function of (seed, sample_size) alone; the
``workers`` setting only parallelizes over chunks and cannot change any
reported number.  Per-chunk partial sums are merged with exact Shewchuk
summation (math.fsum), which is order-insensitive, so scheduling cannot
perturb the statistics either.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import analytic
from .geometry import SampleTriple

__all__ = [
    "CHUNK_SIZE",
    "SIGMA_Q",
    "SimConfig",
    "Histogram",
    "ExperimentRow",
    "ExperimentReport",
    "sample_chunks",
    "sample_stream",
    "estimate_mean",
    "error_scaling_experiment",
    "empirical_pdf",
    "ks_statistic",
    "clt_mean_abs_error",
]

#: Number of triples per logical substream chunk.
CHUNK_SIZE = 1 << 16

#: Standard deviation of Q: sqrt(E[Q^2] - E[Q]^2) = sqrt(1/12 - 1/16)
#: = sqrt(1/48) = 1/(4 sqrt 3).
SIGMA_Q = math.sqrt(1.0 / 48.0)


def clt_mean_abs_error(n: int) -> float:
    """CLT prediction for E[|mean(Q) - 1/4|] at sample size n:
    sqrt(2/(n pi)) * sigma."""
    return math.sqrt(2.0 / (n * math.pi)) * SIGMA_Q


@dataclass(frozen=True)
class SimConfig:
    """Simulation settings.

    ``seed`` and ``sample_size`` fully determine the drawn samples;
    ``workers`` affects scheduling only.
    """

    seed: int = 0
    sample_size: int = 100_000
    trials: int = 1
    workers: int = 1

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.sample_size < 1:
            raise ValueError("sample_size must be positive")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")


def _chunk_layout(n):
    """(index, size) pairs covering n samples in CHUNK_SIZE blocks."""
    full, rest = divmod(n, CHUNK_SIZE)
    layout = [(k, CHUNK_SIZE) for k in range(full)]
    if rest:
        layout.append((full, rest))
    return layout


def _draw_chunk(seed, index, size):
    seq = np.random.SeedSequence(seed, spawn_key=(index,))
    block = np.random.Generator(np.random.PCG64(seq)).random((3, size))
    return block[0], block[1], block[2]


def _map_chunks(config, fn):
    """Apply fn(r, s, t) per chunk, returning results in chunk-index order.

    With workers > 1 the chunks are farmed to a thread pool; numpy releases
    the GIL for the bulk work, so threads do help, and the index-ordered
    merge keeps the output identical to the serial run.
    """
    layout = _chunk_layout(config.sample_size)

    def work(item):
        index, size = item
        r, s, t = _draw_chunk(config.seed, index, size)
        return fn(r, s, t)

    if config.workers == 1:
        return [work(item) for item in layout]
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(work, layout))


def sample_chunks(config: SimConfig):
    """Yield (r, s, t) float arrays chunk by chunk, deterministically."""
    for index, size in _chunk_layout(config.sample_size):
        yield _draw_chunk(config.seed, index, size)


def sample_stream(config: SimConfig):
    """Yield the samples one :class:`SampleTriple` at a time.

    Convenience view of :func:`sample_chunks`; same values, same order.
    """
    for r, s, t in sample_chunks(config):
        for i in range(r.size):
            yield SampleTriple(r[i], s[i], t[i])


def estimate_mean(config: SimConfig) -> float:
    """Sample mean of Q over ``config.sample_size`` draws."""
    partials = _map_chunks(
        config, lambda r, s, t: float(np.sum(analytic._quotient(r, s, t)))
    )
    return math.fsum(partials) / config.sample_size


@dataclass(frozen=True)
class Histogram:
    """Equal-width histogram of Q on [0, 1].

    Bins are [i/B, (i+1)/B) with the last bin closed, so the unit interval
    is covered exactly.
    """

    bin_count: int
    counts: np.ndarray
    total: int

    def __post_init__(self):
        if self.bin_count < 2:
            raise ValueError("need at least 2 bins")
        if int(self.counts.sum()) != self.total:
            raise ValueError("counts must sum to total")

    @property
    def bin_width(self) -> float:
        return 1.0 / self.bin_count

    @property
    def edges(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.bin_count + 1)

    def density(self) -> np.ndarray:
        """Per-bin density; integrates to one by construction."""
        return self.counts / (self.total * self.bin_width)


def empirical_pdf(config: SimConfig, bins: int) -> Histogram:
    """Histogram of Q over [0, 1] with ``bins`` equal-width bins."""
    if bins < 2:
        raise ValueError("need at least 2 bins")
    edges = np.linspace(0.0, 1.0, bins + 1)
    partials = _map_chunks(
        config,
        lambda r, s, t: np.histogram(analytic._quotient(r, s, t), bins=edges)[0],
    )
    counts = np.sum(partials, axis=0)
    return Histogram(bins, counts, int(counts.sum()))


def ks_statistic(config: SimConfig) -> float:
    """Two-sided Kolmogorov-Smirnov distance between the sample ECDF of Q
    and the closed-form CDF.

    D_n = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n) over the order
    statistics x_(1) <= ... <= x_(n).  Requires at least 100 samples.
    """
    if config.sample_size < 100:
        raise ValueError("Kolmogorov-Smirnov needs sample_size >= 100")
    q = np.concatenate(
        _map_chunks(config, lambda r, s, t: analytic._quotient(r, s, t))
    )
    q.sort()
    n = q.size
    f = analytic.cdf(q)
    steps = np.arange(1, n + 1) / n
    d_plus = np.max(steps - f)
    d_minus = np.max(f - (steps - 1.0 / n))
    return float(max(d_plus, d_minus))


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    observed_mean_abs_err: float
    theoretical: float


@dataclass(frozen=True)
class ExperimentReport:
    """Observed vs CLT-predicted |mean error| across sample sizes."""

    rows: tuple[ExperimentRow, ...]
    sigma: float = SIGMA_Q

    def __post_init__(self):
        ns = [row.n for row in self.rows]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("rows must be ordered by strictly increasing n")
        theory = [row.theoretical for row in self.rows]
        if any(b >= a for a, b in zip(theory, theory[1:])):
            raise ValueError("theoretical column must be strictly decreasing")


def error_scaling_experiment(sizes, trials: int, seed: int = 0, workers: int = 1) -> ExperimentReport:
    """Average |mean(Q) - 1/4| over independent trials for each sample size.

    For each size, ``trials`` independent runs are drawn (run (i, j) re-seeds
    from ``SeedSequence(seed, spawn_key=(i, j))``) and the mean absolute
    deviation from 1/4 is paired with the CLT prediction
    sqrt(2/(n pi)) * sigma.  The observed column should track the predicted
    one within a small factor, dropping about tenfold per hundredfold n.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    sizes = sorted(int(n) for n in sizes)
    if not sizes or sizes[0] < 1:
        raise ValueError("sizes must be positive integers")
    if len(set(sizes)) != len(sizes):
        raise ValueError("sizes must be distinct")
    rows = []
    for i, n in enumerate(sizes):
        errs = []
        for j in range(trials):
            run_seed = int(
                np.random.SeedSequence(seed, spawn_key=(i, j)).generate_state(
                    1, dtype=np.uint64
                )[0]
            )
            mean = estimate_mean(SimConfig(seed=run_seed, sample_size=n, workers=workers))
            errs.append(abs(mean - 0.25))
        rows.append(ExperimentRow(n, math.fsum(errs) / trials, clt_mean_abs_error(n)))
    return ExperimentReport(tuple(rows))
