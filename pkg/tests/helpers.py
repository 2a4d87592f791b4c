"""Data builders shared by the test modules."""
from __future__ import annotations

import numpy as np

from lognormal_cat.estimation.groups import make_group_sample, summarize_logs
from lognormal_cat.models.samples import GroupSample, LogSummary


def random_summaries(rng: np.random.Generator, k: int, n_range=(10, 40)) -> list[LogSummary]:
    """k summaries of simulated log-scale samples with heterogeneous parameters."""
    out = []
    for _ in range(k):
        n = int(rng.integers(*n_range))
        y = rng.normal(rng.normal(0.0, 1.0), np.sqrt(rng.uniform(0.3, 2.5)), n)
        out.append(summarize_logs(y))
    return out


def lognormal_samples(
    rng: np.random.Generator,
    mus: list[float],
    sigma2s: list[float],
    ns: list[int],
) -> list[GroupSample]:
    return [
        make_group_sample(np.exp(rng.normal(mu, np.sqrt(s2), n)))
        for mu, s2, n in zip(mus, sigma2s, ns)
    ]


def write_csv(path, groups: dict[str, list[float]]) -> None:
    lines = ["group,value"]
    for label, values in groups.items():
        lines += [f"{label},{v!r}" for v in values]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
