"""
Likelihood ratio test with the asymptotic chi-square(k − 1) reference.
"""
import logging
from collections.abc import Sequence

from scipy.special import gammaincc
from scipy.stats import chi2

from lognormal_cat.config import get_settings
from lognormal_cat.errors import InconsistentLikelihood, InputError, TooFewGroups
from lognormal_cat.estimation.groups import estimate_all
from lognormal_cat.estimation.restricted import fit_restricted, full_loglik
from lognormal_cat.inference.pvalues import check_alpha
from lognormal_cat.models.results import Method, TestResult
from lognormal_cat.models.samples import GroupSample

logger = logging.getLogger(__name__)


def chi2_upper_tail(x: float, df: int) -> float:
    """P(χ²_df > x) = Q(df/2, x/2)."""
    if df < 1:
        raise InputError(f"degrees of freedom must be >= 1, got {df}")
    if x < 0:
        raise InputError(f"chi-square statistic must be >= 0, got {x!r}")
    return float(gammaincc(df / 2.0, x / 2.0))


def likelihood_ratio(samples: Sequence[GroupSample], tol: float | None = None) -> float:
    """Λ = 2(ℓ_full − ℓ_restricted), clamped at 0 within the configured slack."""
    summaries, _ = estimate_all(samples)
    full = full_loglik(summaries, [s.ybar for s in summaries], [s.s2 for s in summaries])
    restricted = fit_restricted(summaries, tol=tol).loglik
    statistic = 2.0 * (full - restricted)
    if statistic < 0:
        slack = get_settings().lambda_slack
        if statistic < -slack:
            raise InconsistentLikelihood(
                f"restricted log-likelihood {restricted!r} exceeds the unrestricted "
                f"maximum {full!r}; the restricted fit is wrong"
            )
        statistic = 0.0
    return statistic


def run_lrt(
    samples: Sequence[GroupSample],
    alpha: float | None = None,
    tol: float | None = None,
) -> TestResult:
    alpha = get_settings().alpha if alpha is None else alpha
    if len(samples) < 2:
        raise TooFewGroups(f"LRT compares at least 2 groups, got {len(samples)}")
    check_alpha(alpha)

    df = len(samples) - 1
    statistic = likelihood_ratio(samples, tol=tol)
    p_value = chi2_upper_tail(statistic, df)
    logger.debug("LRT: lambda=%.6g df=%d p=%.4g", statistic, df, p_value)
    return TestResult(
        method=Method.LRT,
        statistic=statistic,
        p_value=p_value,
        critical_value=float(chi2.isf(alpha, df)),
        alpha=alpha,
        df=df,
        reject=p_value < alpha,
    )
