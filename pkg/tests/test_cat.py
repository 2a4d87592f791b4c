"""Tests for replicate simulation and the CAT decision."""
from __future__ import annotations

import numpy as np
import pytest

from lognormal_cat.errors import AlphaOutOfRange, DegenerateSample, InvalidSeed, MTooSmall, TooFewGroups
from lognormal_cat.estimation.groups import make_group_sample
from lognormal_cat.inference.cat import generate_replicates, run_cat, simulate_replicate
from lognormal_cat.inference.lrt import run_lrt
from lognormal_cat.models.fits import RestrictedFit
from lognormal_cat.utils.rng import Stream, derive_seed, substream


def null_fit(sigma2s: list[float], eta: float = 0.0) -> RestrictedFit:
    s = np.asarray(sigma2s)
    return RestrictedFit(eta_rml=eta, sigma2_rml=s, mu_rml=eta - s / 2, loglik=0.0, iterations=0, converged=True)


# ── Substreams ───────────────────────────────────────────────────────────────


class TestSubstreams:
    def test_same_key_same_numbers(self) -> None:
        a = substream(99, Stream.CAT_REPLICATE, 5, 0).standard_normal(10)
        b = substream(99, Stream.CAT_REPLICATE, 5, 0).standard_normal(10)
        assert np.array_equal(a, b)

    def test_keys_are_independent_streams(self) -> None:
        a = substream(99, Stream.CAT_REPLICATE, 5, 0).standard_normal(10)
        b = substream(99, Stream.CAT_REPLICATE, 6, 0).standard_normal(10)
        c = substream(99, Stream.EXPERIMENT, 5, 0).standard_normal(10)
        assert not np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_derived_seed_is_64_bit(self) -> None:
        seed = derive_seed(2**64 - 1, Stream.EXPERIMENT_CAT_SEED, 3)
        assert 0 <= seed < 2**64
        assert seed == derive_seed(2**64 - 1, Stream.EXPERIMENT_CAT_SEED, 3)

    def test_normal_moments(self) -> None:
        n = 1_000_000
        z = substream(12345, Stream.CAT_REPLICATE, 0, 0).standard_normal(n)
        assert abs(z.mean()) < 4 / np.sqrt(n)
        assert z.var() == pytest.approx(1.0, abs=0.01)


# ── simulate_replicate / generate_replicates ─────────────────────────────────


class TestReplicates:
    def test_deterministic(self) -> None:
        fit = null_fit([0.5, 1.0, 2.0])
        a = simulate_replicate(fit, [10, 12, 14], seed=3, index=17)
        b = simulate_replicate(fit, [10, 12, 14], seed=3, index=17)
        assert a == b
        assert a != simulate_replicate(fit, [10, 12, 14], seed=3, index=18)

    def test_null_distribution_is_chi_square_one(self) -> None:
        fit = null_fit([1.0, 1.0])
        reps = generate_replicates(fit, [200, 200], m=10_000, seed=2718, threads=1)
        assert 0.9 <= reps.values.mean() <= 1.1

    def test_small_variances_do_not_collapse_theta(self) -> None:
        means = []
        for s2 in (1.0, 1e-2, 1e-6):
            reps = generate_replicates(null_fit([s2] * 3), [50, 50, 50], m=2000, seed=31, threads=1)
            means.append(reps.values.mean())
            assert np.mean(reps.values < 0.01) < 0.05
        assert all(1.6 <= m <= 2.8 for m in means)

    @pytest.mark.parametrize("threads", [4, 8])
    def test_independent_of_thread_count(self, threads) -> None:
        fit = null_fit([0.5, 2.0])
        serial = generate_replicates(fit, [8, 15], m=400, seed=77, threads=1)
        parallel = generate_replicates(fit, [8, 15], m=400, seed=77, threads=threads)
        assert np.array_equal(serial.values, parallel.values)

    def test_sorted_and_sized(self) -> None:
        reps = generate_replicates(null_fit([1.0, 1.0, 1.0]), [5, 5, 5], m=300, seed=1, threads=2)
        assert reps.m == 300
        assert np.all(np.diff(reps.values) >= 0)
        assert np.all(reps.values >= 0)


# ── run_cat ──────────────────────────────────────────────────────────────────


class TestRunCat:
    def test_identical_groups(self, twin_samples) -> None:
        result = run_cat(twin_samples, m=500, seed=1, alpha=0.05)
        assert result.statistic == 0.0
        assert result.p_value == 1.0
        assert not result.reject

    def test_deterministic(self, null_samples) -> None:
        a = run_cat(null_samples, m=300, seed=123, alpha=0.05, threads=1)
        b = run_cat(null_samples, m=300, seed=123, alpha=0.05, threads=1)
        assert a == b

    @pytest.mark.parametrize("threads", [4, 8])
    def test_thread_count_does_not_change_result(self, null_samples, threads) -> None:
        serial = run_cat(null_samples, m=300, seed=9, alpha=0.05, threads=1)
        assert run_cat(null_samples, m=300, seed=9, alpha=0.05, threads=threads) == serial

    def test_result_fields(self, null_samples) -> None:
        result = run_cat(null_samples, m=200, seed=5, alpha=0.1)
        assert result.method.value == "cat"
        assert (result.m, result.seed, result.alpha) == (200, 5, 0.1)
        assert 0.0 <= result.p_value <= 1.0
        assert result.reject == (result.p_value < 0.1)
        assert result.critical_value is not None

    def test_strong_separation_rejects(self, separated_samples) -> None:
        cat = run_cat(separated_samples, m=1000, seed=42, alpha=0.05)
        lrt = run_lrt(separated_samples, alpha=0.05)
        assert cat.p_value < 0.01
        assert lrt.p_value < 0.01
        assert cat.reject and lrt.reject
        assert cat.statistic > cat.critical_value

    def test_too_few_replicates(self, null_samples) -> None:
        with pytest.raises(MTooSmall):
            run_cat(null_samples, m=50, seed=1)

    def test_needs_two_groups(self, null_samples) -> None:
        with pytest.raises(TooFewGroups):
            run_cat(null_samples[:1], m=100, seed=1)

    def test_alpha_range(self, null_samples) -> None:
        with pytest.raises(AlphaOutOfRange):
            run_cat(null_samples, m=100, seed=1, alpha=1.5)

    def test_constant_group(self, null_samples) -> None:
        flat = make_group_sample([2.0, 2.0, 2.0])
        with pytest.raises(DegenerateSample):
            run_cat([*null_samples, flat], m=100, seed=1)

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_must_fit_in_64_bits(self, null_samples, seed) -> None:
        with pytest.raises(InvalidSeed):
            run_cat(null_samples, m=100, seed=seed)
