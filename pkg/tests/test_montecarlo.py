import math

import numpy as np
import pytest

from tripick import (
    CHUNK_SIZE,
    SIGMA_Q,
    Histogram,
    SimConfig,
    area_quotient,
    cdf,
    clt_mean_abs_error,
    empirical_pdf,
    error_scaling_experiment,
    estimate_mean,
    ks_statistic,
    moment,
    sample_chunks,
    sample_stream,
)


class TestConfig:
    def test_defaults_valid(self):
        cfg = SimConfig()
        assert cfg.seed == 0 and cfg.workers == 1

    def test_rejects_bad_fields(self):
        with pytest.raises(ValueError):
            SimConfig(seed=-1)
        with pytest.raises(ValueError):
            SimConfig(seed=2**64)
        with pytest.raises(ValueError):
            SimConfig(sample_size=0)
        with pytest.raises(ValueError):
            SimConfig(trials=0)
        with pytest.raises(ValueError):
            SimConfig(workers=0)


class TestSampling:
    def test_stream_deterministic(self):
        cfg = SimConfig(seed=5, sample_size=500)
        first = list(sample_stream(cfg))
        second = list(sample_stream(cfg))
        assert first == second

    def test_stream_matches_chunks(self):
        cfg = SimConfig(seed=5, sample_size=1000)
        stream = list(sample_stream(cfg))
        flat = [
            (r[i], s[i], t[i])
            for r, s, t in sample_chunks(cfg)
            for i in range(r.size)
        ]
        assert [tuple(x) for x in stream] == flat

    def test_chunking_layout(self):
        cfg = SimConfig(seed=0, sample_size=CHUNK_SIZE + 17)
        sizes = [r.size for r, _, _ in sample_chunks(cfg)]
        assert sizes == [CHUNK_SIZE, 17]

    def test_different_seeds_differ(self):
        a = next(iter(sample_stream(SimConfig(seed=0, sample_size=1))))
        b = next(iter(sample_stream(SimConfig(seed=1, sample_size=1))))
        assert tuple(a) != tuple(b)

    def test_marginal_mean(self):
        # CLT band: 5 * (1/sqrt(12)) / sqrt(n) at n = 1e6
        cfg = SimConfig(seed=2024, sample_size=1_000_000)
        total = sum(float(r.sum()) for r, _, _ in sample_chunks(cfg))
        band = 5.0 * (1.0 / math.sqrt(12.0)) / math.sqrt(cfg.sample_size)
        assert abs(total / cfg.sample_size - 0.5) < band

    def test_component_independence(self):
        cfg = SimConfig(seed=2025, sample_size=1_000_000)
        blocks = [np.concatenate(list(part)) for part in zip(*sample_chunks(cfg))]
        r, s, t = blocks
        for a, b in [(r, s), (s, t), (r, t)]:
            corr = np.corrcoef(a, b)[0, 1]
            assert abs(corr) < 5e-3


class TestEstimateMean:
    def test_single_sample_is_quotient(self):
        cfg = SimConfig(seed=99, sample_size=1)
        triple = next(iter(sample_stream(cfg)))
        assert estimate_mean(cfg) == area_quotient(triple)

    def test_close_to_quarter_at_1e6(self):
        cfg = SimConfig(seed=0, sample_size=1_000_000)
        band = 5.0 * SIGMA_Q / math.sqrt(cfg.sample_size)
        assert abs(estimate_mean(cfg) - 0.25) < band

    def test_workers_do_not_change_result(self):
        base = estimate_mean(SimConfig(seed=7, sample_size=3 * CHUNK_SIZE + 11))
        for workers in (2, 4):
            other = estimate_mean(
                SimConfig(seed=7, sample_size=3 * CHUNK_SIZE + 11, workers=workers)
            )
            assert other == base

    def test_trial_variance_scale(self):
        # spread of independent means should track sigma^2 / n
        means = [
            estimate_mean(SimConfig(seed=seed, sample_size=10_000))
            for seed in range(50)
        ]
        observed = np.var(means)
        expected = SIGMA_Q**2 / 10_000
        assert 0.5 * expected < observed < 2.0 * expected


class TestSigma:
    def test_sigma_matches_moments(self):
        exact = moment(2) - moment(1) ** 2
        assert float(exact) == pytest.approx(1 / 48, abs=1e-18)
        assert SIGMA_Q == pytest.approx(math.sqrt(float(exact)), abs=1e-15)
        assert SIGMA_Q == pytest.approx(1.0 / (4.0 * math.sqrt(3.0)), abs=1e-15)

    def test_clt_prediction_formula(self):
        assert clt_mean_abs_error(100) == pytest.approx(
            math.sqrt(2.0 / (100 * math.pi)) / (4 * math.sqrt(3)), abs=1e-15
        )


class TestErrorScaling:
    def test_report_shape_and_theory(self):
        report = error_scaling_experiment([100, 10_000], trials=5, seed=3)
        assert [row.n for row in report.rows] == [100, 10_000]
        for row in report.rows:
            assert row.theoretical == pytest.approx(clt_mean_abs_error(row.n))
        assert report.rows[0].theoretical > report.rows[1].theoretical
        assert report.sigma == SIGMA_Q

    def test_observed_tracks_theory(self):
        report = error_scaling_experiment([1_000, 100_000], trials=40, seed=1)
        for row in report.rows:
            assert 0.5 < row.observed_mean_abs_err / row.theoretical < 2.0

    def test_deterministic(self):
        a = error_scaling_experiment([100, 1_000], trials=10, seed=4)
        b = error_scaling_experiment([100, 1_000], trials=10, seed=4)
        assert a == b

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            error_scaling_experiment([100], trials=0)
        with pytest.raises(ValueError):
            error_scaling_experiment([100, 100], trials=5)
        with pytest.raises(ValueError):
            error_scaling_experiment([], trials=5)


class TestHistogram:
    def test_counts_sum_and_density_normalization(self):
        hist = empirical_pdf(SimConfig(seed=1, sample_size=200_000), 100)
        assert int(hist.counts.sum()) == hist.total == 200_000
        assert hist.density().sum() * hist.bin_width == pytest.approx(1.0, abs=1e-12)

    def test_bin_width(self):
        hist = empirical_pdf(SimConfig(seed=1, sample_size=1_000), 40)
        assert hist.bin_width == 1.0 / 40
        assert hist.edges[0] == 0.0 and hist.edges[-1] == 1.0

    def test_rejects_single_bin(self):
        with pytest.raises(ValueError):
            empirical_pdf(SimConfig(seed=1, sample_size=1_000), 1)
        with pytest.raises(ValueError):
            Histogram(1, np.array([5]), 5)

    def test_breakpoint_bin_density(self):
        # empirical density in the bin holding c = 1/4 vs the bin-averaged
        # analytic density (difference of CDF over the bin / width)
        hist = empirical_pdf(SimConfig(seed=3, sample_size=10_000_000), 200)
        edges = hist.edges
        i = int(np.searchsorted(edges, 0.25, side="right") - 1)
        analytic_avg = (cdf(edges[i + 1]) - cdf(edges[i])) * hist.bin_count
        empirical = hist.density()[i]
        assert empirical == pytest.approx(analytic_avg, rel=0.05)

    def test_last_bin_nearly_empty(self):
        hist = empirical_pdf(SimConfig(seed=3, sample_size=1_000_000), 100)
        assert hist.density()[-1] < 0.05

    def test_workers_do_not_change_counts(self):
        a = empirical_pdf(SimConfig(seed=5, sample_size=250_000), 50)
        b = empirical_pdf(SimConfig(seed=5, sample_size=250_000, workers=3), 50)
        assert np.array_equal(a.counts, b.counts)


class TestKolmogorovSmirnov:
    def test_deterministic(self):
        cfg = SimConfig(seed=6, sample_size=10_000)
        assert ks_statistic(cfg) == ks_statistic(cfg)

    def test_accepts_true_distribution(self):
        d = ks_statistic(SimConfig(seed=0, sample_size=100_000))
        assert d * math.sqrt(100_000) < 1.95

    def test_rejects_wrong_distribution(self):
        # negative control: uniform samples are far from the area-ratio law;
        # the gap approaches sup |c - cdf(c)| ~ 0.35
        rng = np.random.default_rng(0)
        u = np.sort(rng.random(100_000))
        f = cdf(u)
        steps = np.arange(1, u.size + 1) / u.size
        d = max(np.max(steps - f), np.max(f - (steps - 1.0 / u.size)))
        assert d * math.sqrt(u.size) > 10.0

    def test_requires_minimum_size(self):
        with pytest.raises(ValueError):
            ks_statistic(SimConfig(seed=0, sample_size=99))

    def test_workers_do_not_change_result(self):
        a = ks_statistic(SimConfig(seed=8, sample_size=2 * CHUNK_SIZE))
        b = ks_statistic(SimConfig(seed=8, sample_size=2 * CHUNK_SIZE, workers=4))
        assert a == b
