"""Tests for the generic CAT p-value and critical-value rules."""
from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from lognormal_cat.errors import AlphaOutOfRange
from lognormal_cat.inference.pvalues import (
    critical_value_lower,
    critical_value_upper,
    critical_values_two_sided,
    pvalue,
    pvalue_left,
    pvalue_right,
    pvalue_two_sided,
)
from lognormal_cat.models.fits import ReplicateSet
from lognormal_cat.models.results import Alternative


def replicates(values) -> ReplicateSet:
    return ReplicateSet(values=values, seed=0)


def small_replicate_sets():
    """Every multiset of size 1..8 over {0, 1, 2, 3}."""
    for m in range(1, 9):
        for combo in itertools.combinations_with_replacement(range(4), m):
            yield list(combo)


OBSERVED = [-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5]


class TestTailProbabilities:
    def test_right_tail_example(self) -> None:
        assert pvalue_right(replicates([1, 2, 3, 4]), 2.5) == 0.5

    def test_left_tail_example(self) -> None:
        assert pvalue_left(replicates([1, 2, 3, 4]), 2.5) == 0.5

    def test_boundaries(self) -> None:
        r = replicates([1, 2, 3, 4])
        assert pvalue_right(r, 10.0) == 0.0
        assert pvalue_right(r, 0.0) == 1.0
        assert pvalue_left(r, 0.0) == 0.0
        assert pvalue_left(r, 10.0) == 1.0

    def test_ties_count_in_neither_tail(self) -> None:
        r = replicates([1, 2, 2, 3])
        assert pvalue_left(r, 2.0) == 0.25
        assert pvalue_right(r, 2.0) == 0.25

    @pytest.mark.parametrize("p1, expected", [(0.5, 1.0), (0.02, 0.04), (0.99, 0.02)])
    def test_two_sided(self, p1, expected) -> None:
        m = 100
        below = round(p1 * m)
        r = replicates([0.0] * below + [2.0] * (m - below))
        assert pvalue_two_sided(r, 1.0) == pytest.approx(expected)

    def test_dispatch(self) -> None:
        r = replicates([1, 2, 3, 4, 5])
        assert pvalue(r, 1.5, Alternative.LESS) == pvalue_left(r, 1.5)
        assert pvalue(r, 1.5, Alternative.GREATER) == pvalue_right(r, 1.5)
        assert pvalue(r, 1.5, "two_sided") == pvalue_two_sided(r, 1.5)

    def test_matches_exhaustive_counting(self) -> None:
        for values in small_replicate_sets():
            r = replicates(values)
            m = len(values)
            for obs in OBSERVED:
                left = sum(v < obs for v in values) / m
                right = sum(v > obs for v in values) / m
                ties = sum(v == obs for v in values) / m
                assert pvalue_left(r, obs) == pytest.approx(left, abs=1e-15)
                assert pvalue_right(r, obs) == pytest.approx(right, abs=1e-15)
                assert pvalue_two_sided(r, obs) == pytest.approx(min(1.0, 2 * min(left, 1 - left)), abs=1e-15)
                assert pvalue_left(r, obs) + pvalue_right(r, obs) + ties == pytest.approx(1.0)

    def test_right_tail_non_increasing(self, rng) -> None:
        r = replicates(rng.chisquare(2, 500))
        ps = [pvalue_right(r, x) for x in np.linspace(-1, 15, 200)]
        assert all(a >= b for a, b in zip(ps, ps[1:]))


class TestCriticalValues:
    def test_integer_rank(self) -> None:
        r = replicates(np.arange(1, 101, dtype=float))
        assert critical_value_upper(r, 0.05) == 95.0

    def test_rank_is_rounded_up(self) -> None:
        r = replicates(np.arange(1, 11, dtype=float))
        assert critical_value_upper(r, 0.05) == 10.0

    @pytest.mark.parametrize("alpha", [0.0, 1.0, 1.5, -0.1])
    def test_alpha_out_of_range(self, alpha) -> None:
        r = replicates(np.arange(10, dtype=float))
        with pytest.raises(AlphaOutOfRange):
            critical_value_upper(r, alpha)

    def test_lower_needs_a_rank(self) -> None:
        with pytest.raises(AlphaOutOfRange):
            critical_value_lower(replicates([1.0, 2.0, 3.0]), 0.05)

    def test_lower_and_two_sided(self) -> None:
        r = replicates(np.arange(1, 201, dtype=float))
        assert critical_value_lower(r, 0.05) == 10.0
        assert critical_values_two_sided(r, 0.05) == (5.0, 195.0)

    def test_matches_exhaustive_ranks(self) -> None:
        for values in small_replicate_sets():
            r = replicates(values)
            m = len(values)
            ordered = sorted(values)
            for alpha in (0.05, 0.1, 0.25, 0.5, 0.75):
                rank = math.ceil(round((1 - alpha) * m, 9))
                assert critical_value_upper(r, alpha) == ordered[rank - 1]

    def test_upper_monotone_in_level(self, rng) -> None:
        r = replicates(rng.normal(size=1000))
        crits = [critical_value_upper(r, a) for a in (0.5, 0.2, 0.1, 0.05, 0.01, 0.001)]
        assert all(a <= b for a, b in zip(crits, crits[1:]))

    def test_decisions_agree_off_the_boundary(self, rng) -> None:
        r = replicates(rng.chisquare(2, 1000))
        alpha = 0.05
        crit = critical_value_upper(r, alpha)
        for obs in rng.uniform(0, 12, 2000):
            p = pvalue_right(r, obs)
            if p != alpha:
                assert (p < alpha) == (obs > crit)
