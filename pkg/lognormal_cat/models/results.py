"""
Serializable outcomes: single-test results and simulation-study results.
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class Method(str, Enum):
    CAT = "cat"
    LRT = "lrt"


class Alternative(str, Enum):
    LESS = "less"
    GREATER = "greater"
    TWO_SIDED = "two_sided"


class TestResult(BaseModel):
    model_config = ConfigDict(frozen=True)
    __test__ = False  # not a pytest class

    method: Method
    statistic: float
    p_value: float = Field(ge=0.0, le=1.0)
    critical_value: float | None = None
    alpha: float = Field(gt=0.0, lt=1.0)
    m: int | None = None
    seed: int | None = None
    df: int | None = None
    reject: bool


class GroupReport(BaseModel):
    """Per-group summary line of a test report."""

    model_config = ConfigDict(frozen=True)

    label: str
    n: int
    ybar: float
    s2: float
    eta_hat: float
    v_hat: float


class MethodSummary(BaseModel):
    method: Method
    experiments: int
    rejections: int
    failures: int
    rejection_rate: float
    mc_std_error: float
    mean_p_value: float
    wall_time_s: float
    p_values: list[float] = Field(default_factory=list, repr=False)


CSV_COLUMNS = [
    "scenario_id", "method", "k", "ns", "alpha", "reps", "m", "seed",
    "is_null", "rejection_rate", "mc_std_error", "mean_p_value",
    "failures", "wall_time_s",
]


class StudyResult(BaseModel):
    scenario_id: str
    digest: str
    k: int
    ns: list[int]
    alpha: float
    reps: int
    m: int
    seed: int
    is_null: bool
    methods: list[MethodSummary]
    wall_time_s: float

    def summary(self, method: Method) -> MethodSummary:
        for s in self.methods:
            if s.method == method:
                return s
        raise KeyError(f"method {method.value} was not run in this study")

    def rejection_rate_at(self, method: Method, alpha: float) -> float:
        """Rejection rate the same experiments give at another nominal level."""
        p_values = self.summary(method).p_values
        if not p_values:
            return 0.0
        return sum(p < alpha for p in p_values) / len(p_values)

    def csv_rows(self) -> list[dict]:
        return [
            {
                "scenario_id": self.scenario_id,
                "method": s.method.value,
                "k": self.k,
                "ns": ";".join(str(n) for n in self.ns),
                "alpha": self.alpha,
                "reps": self.reps,
                "m": self.m if s.method == Method.CAT else "",
                "seed": self.seed,
                "is_null": str(self.is_null).lower(),
                "rejection_rate": s.rejection_rate,
                "mc_std_error": s.mc_std_error,
                "mean_p_value": s.mean_p_value,
                "failures": s.failures,
                "wall_time_s": round(s.wall_time_s, 3),
            }
            for s in self.methods
        ]
