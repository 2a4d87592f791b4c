"""
Per-group data model: raw sample, log-scale summary, unrestricted estimate,
and the (η, v) pairs fed to the θ statistic.
"""
import math
from dataclasses import dataclass

import numpy as np

from lognormal_cat.errors import InputError, NonPositiveObservation, TooFewGroups, TooFewObservations

MIN_GROUP_SIZE = 2


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class GroupSample:
    """Positive observations X_ij of one population and their logs Y_ij."""

    observations: np.ndarray
    log_values: np.ndarray

    def __post_init__(self):
        x = _frozen(self.observations)
        y = _frozen(self.log_values)
        if x.ndim != 1 or x.shape != y.shape:
            raise InputError("observations and log_values must be 1-D arrays of equal length")
        if x.size < MIN_GROUP_SIZE:
            raise TooFewObservations(
                f"a group needs at least {MIN_GROUP_SIZE} observations, got {x.size}"
            )
        if not np.all(np.isfinite(x) & (x > 0)):
            raise NonPositiveObservation("all observations must be finite and > 0")
        object.__setattr__(self, "observations", x)
        object.__setattr__(self, "log_values", y)

    @property
    def n(self) -> int:
        return int(self.observations.size)


@dataclass(frozen=True)
class LogSummary:
    """Sufficient statistics on the log scale; s2 uses divisor n."""

    n: int
    ybar: float
    s2: float


@dataclass(frozen=True)
class GroupEstimate:
    n: int
    mu_hat: float
    sigma2_hat: float
    eta_hat: float
    v_hat: float

    @property
    def phi_hat(self) -> float:
        """Estimated population mean on the original scale, exp(η̂)."""
        return math.exp(self.eta_hat)


@dataclass(frozen=True, eq=False)
class ThetaInput:
    etas: np.ndarray
    vs: np.ndarray

    def __post_init__(self):
        etas = _frozen(self.etas)
        vs = _frozen(self.vs)
        if etas.ndim != 1 or etas.shape != vs.shape:
            raise InputError("etas and vs must be 1-D lists of equal length")
        if etas.size < 2:
            raise TooFewGroups(f"at least 2 groups are required, got {etas.size}")
        if not np.all(vs > 0):
            raise InputError("all variances v_i must be strictly positive")
        object.__setattr__(self, "etas", etas)
        object.__setattr__(self, "vs", vs)

    @property
    def k(self) -> int:
        return int(self.etas.size)

    @classmethod
    def from_estimates(cls, estimates: list[GroupEstimate]) -> "ThetaInput":
        return cls(
            etas=[e.eta_hat for e in estimates],
            vs=[e.v_hat for e in estimates],
        )
