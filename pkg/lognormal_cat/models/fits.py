"""
Null-model fit and the ordered replicate statistics simulated from it.
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class RestrictedFit:
    """MLEs under H0: η_1 = … = η_k = η."""

    eta_rml: float
    sigma2_rml: np.ndarray
    mu_rml: np.ndarray
    loglik: float
    iterations: int
    converged: bool

    def __post_init__(self):
        for name in ("sigma2_rml", "mu_rml"):
            arr = np.array(getattr(self, name), dtype=np.float64)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def k(self) -> int:
        return int(self.sigma2_rml.size)


@dataclass(frozen=True, eq=False)
class ReplicateSet:
    """Replicate statistics θ̂_{0(1)} ≤ … ≤ θ̂_{0(M)}."""

    values: np.ndarray
    seed: int

    def __post_init__(self):
        arr = np.sort(np.asarray(self.values, dtype=np.float64))
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def m(self) -> int:
        return int(self.values.size)
