"""
Generic CAT decision rules over an ordered set of replicate statistics.

Tail counts use strict inequalities, so replicates tied with the observed
value fall in neither tail.
"""
import math

import numpy as np

from lognormal_cat.errors import AlphaOutOfRange
from lognormal_cat.models.fits import ReplicateSet
from lognormal_cat.models.results import Alternative

# (1 − α)M is meant to be an integer; absorb float noise like 0.95 * 100
_RANK_DIGITS = 9


def pvalue_right(replicates: ReplicateSet, observed: float) -> float:
    """(1/M) Σ I(θ̂_l > θ̂)."""
    at_or_below = np.searchsorted(replicates.values, observed, side="right")
    return float(replicates.m - at_or_below) / replicates.m


def pvalue_left(replicates: ReplicateSet, observed: float) -> float:
    """(1/M) Σ I(θ̂_l < θ̂)."""
    below = np.searchsorted(replicates.values, observed, side="left")
    return float(below) / replicates.m


def pvalue_two_sided(replicates: ReplicateSet, observed: float) -> float:
    p1 = pvalue_left(replicates, observed)
    return min(1.0, max(0.0, 2.0 * min(p1, 1.0 - p1)))


def pvalue(replicates: ReplicateSet, observed: float, alternative: Alternative) -> float:
    rules = {
        Alternative.LESS: pvalue_left,
        Alternative.GREATER: pvalue_right,
        Alternative.TWO_SIDED: pvalue_two_sided,
    }
    return rules[Alternative(alternative)](replicates, observed)


def check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must lie in (0, 1), got {alpha!r}")


def _order_statistic(replicates: ReplicateSet, rank: int, what: str) -> float:
    if not 1 <= rank <= replicates.m:
        raise AlphaOutOfRange(
            f"{what} needs rank in [1, {replicates.m}], got {rank}; "
            "alpha is too extreme for this number of replicates"
        )
    return float(replicates.values[rank - 1])


def critical_value_upper(replicates: ReplicateSet, alpha: float) -> float:
    """θ̂_U = θ̂_{0(r)} with r = ceil((1 − α)M), 1-indexed."""
    check_alpha(alpha)
    rank = math.ceil(round((1.0 - alpha) * replicates.m, _RANK_DIGITS))
    return _order_statistic(replicates, rank, "upper critical value")


def critical_value_lower(replicates: ReplicateSet, alpha: float) -> float:
    """θ̂_L = θ̂_{0(r)} with r = floor(αM), 1-indexed."""
    check_alpha(alpha)
    rank = math.floor(round(alpha * replicates.m, _RANK_DIGITS))
    return _order_statistic(replicates, rank, "lower critical value")


def critical_values_two_sided(replicates: ReplicateSet, alpha: float) -> tuple[float, float]:
    check_alpha(alpha)
    return (
        critical_value_lower(replicates, alpha / 2.0),
        critical_value_upper(replicates, alpha / 2.0),
    )
