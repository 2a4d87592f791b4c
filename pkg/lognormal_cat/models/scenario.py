"""
Simulation scenarios: true log-normal parameters plus study settings.
"""
import hashlib
import json
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from lognormal_cat.config import get_settings
from lognormal_cat.errors import InvalidScenario
from lognormal_cat.models.results import Method
from lognormal_cat.utils.rng import MAX_SEED, Stream, derive_seed

NULL_TOLERANCE = 1e-12


class Scenario(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    scenario_id: str = "scenario"
    k: int = Field(ge=2)
    ns: list[int]
    mus: list[float]
    sigma2s: list[float]
    alpha: float = Field(default_factory=lambda: get_settings().alpha, gt=0.0, lt=1.0)
    reps: int = Field(default_factory=lambda: get_settings().study_reps, ge=100)
    m: int = Field(default_factory=lambda: get_settings().study_replicates, ge=100)
    seed: int | None = Field(default=None, ge=0, le=MAX_SEED)
    methods: list[Method] = Field(default=[Method.CAT, Method.LRT])

    @model_validator(mode="after")
    def _check_shapes(self) -> "Scenario":
        for name in ("ns", "mus", "sigma2s"):
            if len(getattr(self, name)) != self.k:
                raise ValueError(f"{name} must have k={self.k} entries")
        if any(n < 2 for n in self.ns):
            raise ValueError("every group needs n >= 2")
        if any(not s > 0 for s in self.sigma2s):
            raise ValueError("every sigma2 must be strictly positive")
        if not np.all(np.isfinite(self.mus + self.sigma2s)):
            raise ValueError("mus and sigma2s must be finite")
        if not self.methods:
            raise ValueError("no methods requested")
        return self

    @property
    def etas(self) -> np.ndarray:
        return np.asarray(self.mus) + np.asarray(self.sigma2s) / 2.0

    @property
    def is_null(self) -> bool:
        etas = self.etas
        return bool(etas.max() - etas.min() <= NULL_TOLERANCE)

    def digest(self) -> str:
        canonical = json.dumps(self.model_dump(mode="json"), sort_keys=True)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]

    @classmethod
    def null(
        cls,
        sigma2s: list[float],
        n: int | list[int],
        eta: float = 0.0,
        **kwargs,
    ) -> "Scenario":
        """Scenario with all η_i equal to eta: μ_i = η − σ²_i/2."""
        k = len(sigma2s)
        ns = list(n) if isinstance(n, (list, tuple)) else [n] * k
        mus = [eta - s / 2.0 for s in sigma2s]
        return cls(k=k, ns=ns, mus=mus, sigma2s=list(sigma2s), **kwargs)

    def shifted(self, delta: float, group: int = 0) -> "Scenario":
        """Same scenario with η of one group moved by delta."""
        mus = list(self.mus)
        mus[group] += delta
        return self.model_copy(
            update={"mus": mus, "scenario_id": f"{self.scenario_id}+d{delta:g}"}
        )


def default_suite(seed: int, **kwargs) -> list[Scenario]:
    """Null scenarios over k ∈ {2,3,5}, balanced n ∈ {10,20,50} and four σ² patterns."""
    scenarios = []
    for k in (2, 3, 5):
        patterns = {
            "eq0.5": [0.5] * k,
            "eq1": [1.0] * k,
            "eq2": [2.0] * k,
            "uneq": np.linspace(0.5, 2.0, k).tolist(),
        }
        for n in (10, 20, 50):
            for name, sigma2s in patterns.items():
                index = len(scenarios)
                scenarios.append(Scenario.null(
                    sigma2s, n,
                    scenario_id=f"k{k}_n{n}_{name}",
                    seed=derive_seed(seed, Stream.SUITE, index),
                    **kwargs,
                ))
    return scenarios


def load_scenarios(path: str | Path) -> list[Scenario]:
    """Read one scenario object or a list of them from a JSON file."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text("utf-8"))
    except FileNotFoundError:
        raise InvalidScenario(f"scenario file not found: {path}")
    except UnicodeDecodeError as exc:
        raise InvalidScenario(f"{path}: not valid UTF-8 ({exc.reason})")
    except OSError as exc:
        raise InvalidScenario(f"cannot read scenario file {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InvalidScenario(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")

    items = raw if isinstance(raw, list) else [raw]
    if not items:
        raise InvalidScenario(f"{path}: no scenarios")
    scenarios = []
    for i, item in enumerate(items):
        try:
            scenarios.append(Scenario.model_validate(item))
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(p) for p in first["loc"]) or "scenario"
            raise InvalidScenario(f"{path}: scenario #{i}: {where}: {first['msg']}")
    return scenarios
