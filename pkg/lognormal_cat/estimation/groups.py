"""
Closed-form per-group quantities on the log scale.

Y_ij = log X_ij ~ N(μ_i, σ²_i). MLEs are ȳ_i and S²_i (divisor n);
η̂_i = ȳ_i + S²_i/2 estimates the log of the population mean and has
approximate variance v_i = σ²_i/n_i + (n_i − 1)σ⁴_i/(2n_i²).
"""
import logging
from collections.abc import Sequence

import numpy as np

from lognormal_cat.errors import DegenerateSample, NonPositiveObservation, TooFewObservations
from lognormal_cat.models.samples import (
    MIN_GROUP_SIZE,
    GroupEstimate,
    GroupSample,
    LogSummary,
    ThetaInput,
)

logger = logging.getLogger(__name__)


def make_group_sample(raw: Sequence[float]) -> GroupSample:
    """Validate positive observations and attach their logs."""
    x = np.asarray(raw, dtype=np.float64).ravel()
    bad = np.flatnonzero(~(np.isfinite(x) & (x > 0)))
    if bad.size:
        i = int(bad[0])
        raise NonPositiveObservation(
            f"observation {i + 1} is {x[i]!r}; all observations must be finite and > 0"
        )
    if x.size < MIN_GROUP_SIZE:
        raise TooFewObservations(
            f"a group needs at least {MIN_GROUP_SIZE} observations, got {x.size}"
        )
    return GroupSample(observations=x, log_values=np.log(x))


def summarize_logs(y: np.ndarray) -> LogSummary:
    n = int(y.size)
    if np.all(y == y[0]):
        # constant sample: the mean must not pick up rounding error
        return LogSummary(n=n, ybar=float(y[0]), s2=0.0)
    ybar = float(np.mean(y))
    s2 = float(np.mean((y - ybar) ** 2))
    return LogSummary(n=n, ybar=ybar, s2=s2)


def summarize(sample: GroupSample) -> LogSummary:
    """ȳ and S² (divisor n), two-pass."""
    return summarize_logs(sample.log_values)


def plugin_variance(sigma2: float | np.ndarray, n: int | np.ndarray):
    """v = σ²/n + (n−1)σ⁴/(2n²)."""
    return sigma2 / n + (n - 1) * sigma2**2 / (2.0 * n**2)


def estimate_group(summary: LogSummary) -> GroupEstimate:
    if not summary.s2 > 0:
        raise DegenerateSample(
            f"group with n={summary.n} has zero variance on the log scale "
            "(all observations equal); the test is undefined"
        )
    return GroupEstimate(
        n=summary.n,
        mu_hat=summary.ybar,
        sigma2_hat=summary.s2,
        eta_hat=summary.ybar + summary.s2 / 2.0,
        v_hat=float(plugin_variance(summary.s2, summary.n)),
    )


def theta_statistic(theta_input: ThetaInput) -> float:
    """θ = Σ (η_i − η̄)²/v_i with η̄ the 1/v-weighted mean of the η_i."""
    return float(theta_from_arrays(theta_input.etas, theta_input.vs))


def theta_from_arrays(etas: np.ndarray, vs: np.ndarray) -> float | np.ndarray:
    """Unvalidated θ along the last axis; used for replicate batches."""
    w = 1.0 / vs
    etabar = np.sum(w * etas, axis=-1, keepdims=True) / np.sum(w, axis=-1, keepdims=True)
    theta = np.sum(w * (etas - etabar) ** 2, axis=-1)
    equal = np.all(etas == etas[..., :1], axis=-1)
    return np.where(equal, 0.0, theta)


def estimate_all(samples: Sequence[GroupSample]) -> tuple[list[LogSummary], list[GroupEstimate]]:
    summaries = [summarize(s) for s in samples]
    estimates = []
    for i, summary in enumerate(summaries):
        try:
            estimates.append(estimate_group(summary))
        except DegenerateSample as exc:
            raise DegenerateSample(f"group {i + 1}: {exc.message}")
    logger.debug("Estimated %d groups: eta_hat=%s", len(estimates), [e.eta_hat for e in estimates])
    return summaries, estimates
