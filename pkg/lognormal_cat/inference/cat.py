"""
Computational Approach Test for equality of k log-normal means.

  1. θ̂ from the unrestricted MLEs.
  2. Restricted MLEs under H0.
  3. M artificial data sets from N(μ_i(RML), σ²_i(RML)), θ̂_0l for each.
  4. Order the θ̂_0l.
  5. p = (1/M) Σ I(θ̂_0l > θ̂); reject when p < α.

Replicate l draws from its own substream (seed, l), so results do not
depend on how replicates are spread over worker threads.
"""
import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from lognormal_cat.config import get_settings, resolve_threads
from lognormal_cat.errors import MTooSmall, NumericalError, TooFewGroups
from lognormal_cat.estimation.groups import (
    estimate_all,
    plugin_variance,
    theta_from_arrays,
    theta_statistic,
)
from lognormal_cat.estimation.restricted import fit_restricted
from lognormal_cat.inference.pvalues import check_alpha, critical_value_upper, pvalue_right
from lognormal_cat.models.fits import ReplicateSet, RestrictedFit
from lognormal_cat.models.results import Method, TestResult
from lognormal_cat.models.samples import GroupSample, ThetaInput
from lognormal_cat.utils.rng import Stream, check_seed, fresh_seed, substream

logger = logging.getLogger(__name__)

MAX_REDRAWS = 100


def simulate_replicate(
    fit: RestrictedFit,
    ns: Sequence[int],
    seed: int,
    index: int,
) -> float:
    """θ̂_0l for replicate `index`, drawn from the restricted fit.

    A draw in which some group has zero sample variance is discarded and
    replaced by the next substream of the same replicate.
    """
    ns = np.asarray(ns, dtype=np.int64)
    starts = np.concatenate(([0], np.cumsum(ns)[:-1]))
    means = np.repeat(fit.mu_rml, ns)
    scales = np.repeat(np.sqrt(fit.sigma2_rml), ns)

    for attempt in range(MAX_REDRAWS):
        rng = substream(seed, Stream.CAT_REPLICATE, index, attempt)
        y = means + scales * rng.standard_normal(int(ns.sum()))
        ybar = np.add.reduceat(y, starts) / ns
        s2 = np.add.reduceat((y - np.repeat(ybar, ns)) ** 2, starts) / ns
        if np.all(s2 > 0):
            return float(theta_from_arrays(ybar + s2 / 2.0, plugin_variance(s2, ns)))
        logger.debug("Replicate %d attempt %d drew a zero-variance group; redrawing", index, attempt)
    raise NumericalError(f"replicate {index} kept drawing zero-variance groups")


def generate_replicates(
    fit: RestrictedFit,
    ns: Sequence[int],
    m: int,
    seed: int,
    threads: int | None = None,
) -> ReplicateSet:
    threads = min(resolve_threads(threads), m)
    values = np.empty(m, dtype=np.float64)

    def fill(indices: np.ndarray) -> None:
        for l in indices:
            values[l] = simulate_replicate(fit, ns, seed, int(l))

    chunks = np.array_split(np.arange(m), threads)
    if threads == 1:
        fill(chunks[0])
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, chunks))
    return ReplicateSet(values=values, seed=seed)


def run_cat(
    samples: Sequence[GroupSample],
    m: int | None = None,
    seed: int | None = None,
    alpha: float | None = None,
    threads: int | None = None,
    tol: float | None = None,
) -> TestResult:
    settings = get_settings()
    m = settings.default_replicates if m is None else m
    alpha = settings.alpha if alpha is None else alpha
    if seed is None:
        seed = fresh_seed()
        logger.info("No seed given; using generated seed %d", seed)
    check_seed(seed)

    if len(samples) < 2:
        raise TooFewGroups(f"CAT compares at least 2 groups, got {len(samples)}")
    if m < settings.min_replicates:
        raise MTooSmall(f"M must be at least {settings.min_replicates}, got {m}")
    check_alpha(alpha)

    # ── Step 1: observed statistic ─────────────────────────────
    summaries, estimates = estimate_all(samples)
    theta_hat = theta_statistic(ThetaInput.from_estimates(estimates))

    # ── Step 2: restricted MLEs ────────────────────────────────
    fit = fit_restricted(summaries, tol=tol)

    # ── Steps 3–4: replicate statistics, ordered ───────────────
    replicates = generate_replicates(fit, [s.n for s in summaries], m, seed, threads)

    # ── Step 5: decision ───────────────────────────────────────
    p_value = pvalue_right(replicates, theta_hat)
    critical = critical_value_upper(replicates, alpha)
    logger.debug(
        "CAT: theta=%.6g eta_rml=%.6g p=%.4f crit=%.6g (M=%d)",
        theta_hat, fit.eta_rml, p_value, critical, m,
    )
    return TestResult(
        method=Method.CAT,
        statistic=theta_hat,
        p_value=p_value,
        critical_value=critical,
        alpha=alpha,
        m=m,
        seed=seed,
        reject=p_value < alpha,
    )
