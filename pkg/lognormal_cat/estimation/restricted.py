"""
Restricted maximum likelihood under H0: η_1 = … = η_k = η.

With μ_i = η − σ²_i/2 the likelihood depends on (η, σ²_1, …, σ²_k). For a
fixed η each σ²_i has a closed-form maximizer, the positive root of
s²/4 + s − (S²_i + (ȳ_i − η)²) = 0, so the fit reduces to a bracketed
one-dimensional minimization of the profile negative log-likelihood in η.
"""
import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from lognormal_cat.config import get_settings
from lognormal_cat.errors import (
    DegenerateProfile,
    DegenerateSample,
    InputError,
    NoConvergence,
    NonPositiveVariance,
)
from lognormal_cat.models.fits import RestrictedFit
from lognormal_cat.models.samples import LogSummary

logger = logging.getLogger(__name__)

LOG_2PI = math.log(2.0 * math.pi)


def _arrays(summaries: Sequence[LogSummary]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = np.array([s.n for s in summaries], dtype=np.float64)
    ybar = np.array([s.ybar for s in summaries], dtype=np.float64)
    s2 = np.array([s.s2 for s in summaries], dtype=np.float64)
    return n, ybar, s2


def _group_logliks(n, ybar, s2, mus, sigma2s) -> np.ndarray:
    return -0.5 * n * (LOG_2PI + np.log(sigma2s)) - n * (s2 + (ybar - mus) ** 2) / (2.0 * sigma2s)


def full_loglik(
    summaries: Sequence[LogSummary],
    mus: Sequence[float],
    sigma2s: Sequence[float],
) -> float:
    """Normal log-likelihood of the log-scale data through sufficient statistics."""
    mus = np.asarray(mus, dtype=np.float64)
    sigma2s = np.asarray(sigma2s, dtype=np.float64)
    if not (len(summaries) == mus.size == sigma2s.size):
        raise InputError("summaries, mus and sigma2s must have equal length")
    if not np.all(sigma2s > 0):
        raise NonPositiveVariance(f"variances must be > 0, got {sigma2s.tolist()}")
    n, ybar, s2 = _arrays(summaries)
    return float(np.sum(_group_logliks(n, ybar, s2, mus, sigma2s)))


def _profile_sigma2s(eta: float, ybar: np.ndarray, s2: np.ndarray) -> np.ndarray:
    q = s2 + (ybar - eta) ** 2
    if not np.all(q > 0):
        raise DegenerateProfile(
            f"profile variance collapses to 0 at eta={eta!r} (S² = 0 and ȳ = η)"
        )
    # 2(√(1+q) − 1) without the cancellation for small q
    return 2.0 * q / (np.sqrt(1.0 + q) + 1.0)


def profile_sigma2(eta: float, summary: LogSummary) -> float:
    """σ²_i maximizing the group's likelihood at fixed η with μ_i = η − σ²_i/2."""
    return float(_profile_sigma2s(eta, np.array([summary.ybar]), np.array([summary.s2]))[0])


def _negloglik(eta: float, n: np.ndarray, ybar: np.ndarray, s2: np.ndarray) -> float:
    sigma2s = _profile_sigma2s(eta, ybar, s2)
    return -float(np.sum(_group_logliks(n, ybar, s2, eta - sigma2s / 2.0, sigma2s)))


def profile_negloglik(eta: float, summaries: Sequence[LogSummary]) -> float:
    n, ybar, s2 = _arrays(summaries)
    return _negloglik(eta, n, ybar, s2)


def _score(eta: float, n: np.ndarray, ybar: np.ndarray, s2: np.ndarray) -> float:
    """d/dη of the profile negative log-likelihood (envelope theorem)."""
    sigma2s = _profile_sigma2s(eta, ybar, s2)
    return -float(np.sum(n * (ybar - eta + sigma2s / 2.0) / sigma2s))


def _polish(eta: float, n: np.ndarray, ybar: np.ndarray, s2: np.ndarray) -> float:
    """Refine a function-value minimum to the root of the profile score.

    Comparing function values cannot place the minimum closer than about
    sqrt(machine epsilon); the score crosses zero cleanly there.
    """
    half = 1e-6 * max(1.0, abs(eta))
    a, b = eta - half, eta + half
    ga, gb = _score(a, n, ybar, s2), _score(b, n, ybar, s2)
    if not (ga < 0.0 < gb):
        return eta
    return float(brentq(_score, a, b, args=(n, ybar, s2), xtol=1e-15))


def _bracket(f, lo: float, hi: float, candidates: np.ndarray, max_widenings: int):
    """Widen [lo, hi] geometrically until an interior point beats both ends."""
    interior = [float(c) for c in candidates if lo < c < hi] + [0.5 * (lo + hi)]
    values = [f(c) for c in interior]
    best = int(np.argmin(values))
    c, fc = interior[best], values[best]
    flo, fhi = f(lo), f(hi)

    for _ in range(max_widenings + 1):
        left, right = flo <= fc, fhi <= fc
        if left and right:
            raise NoConvergence(
                f"profile likelihood descends towards both ends of [{lo:g}, {hi:g}]"
            )
        if not (left or right):
            return lo, c, hi
        width = hi - lo
        if left:
            c, fc = lo, flo
            lo = lo - width
            flo = f(lo)
        else:
            c, fc = hi, fhi
            hi = hi + width
            fhi = f(hi)
    raise NoConvergence(f"could not bracket the restricted MLE after {max_widenings} widenings")


def fit_restricted(
    summaries: Sequence[LogSummary],
    tol: float | None = None,
    max_iter: int | None = None,
) -> RestrictedFit:
    """Restricted MLEs (η_RML, σ²_i(RML), μ_i(RML)) and the maximized log-likelihood."""
    settings = get_settings()
    tol = settings.restricted_tol if tol is None else tol
    max_iter = settings.restricted_max_iter if max_iter is None else max_iter

    if not summaries:
        raise InputError("fit_restricted needs at least one group")
    n, ybar, s2 = _arrays(summaries)
    if not np.all(s2 > 0):
        i = int(np.flatnonzero(~(s2 > 0))[0])
        raise DegenerateSample(f"group {i + 1} has zero variance on the log scale")

    eta_hats = ybar + s2 / 2.0
    if np.all(eta_hats == eta_hats[0]):
        # the unrestricted optimum already satisfies H0
        eta = float(eta_hats[0])
        return RestrictedFit(
            eta_rml=eta,
            sigma2_rml=s2,
            mu_rml=eta - s2 / 2.0,
            loglik=float(np.sum(_group_logliks(n, ybar, s2, ybar, s2))),
            iterations=0,
            converged=True,
        )

    def objective(eta: float) -> float:
        return _negloglik(eta, n, ybar, s2)

    lo, c, hi = _bracket(
        objective,
        float(ybar.min()) - 1.0,
        float(eta_hats.max()) + 1.0,
        eta_hats,
        settings.max_bracket_widenings,
    )
    res = minimize_scalar(
        objective,
        bracket=(lo, c, hi),
        method="brent",
        options={"xtol": tol, "maxiter": max_iter},
    )
    iterations = int(getattr(res, "nit", res.nfev))
    if not getattr(res, "success", iterations < max_iter):
        raise NoConvergence(
            f"restricted MLE did not converge in {max_iter} iterations"
        )

    eta = _polish(float(res.x), n, ybar, s2)
    sigma2s = _profile_sigma2s(eta, ybar, s2)
    loglik = -objective(eta)
    logger.debug(
        "Restricted fit: eta=%.10g loglik=%.10g iterations=%d bracket=[%g, %g]",
        eta, loglik, iterations, lo, hi,
    )
    return RestrictedFit(
        eta_rml=eta,
        sigma2_rml=sigma2s,
        mu_rml=eta - sigma2s / 2.0,
        loglik=loglik,
        iterations=iterations,
        converged=True,
    )
