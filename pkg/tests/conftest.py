"""Shared fixtures."""
import numpy as np
import pytest

from lognormal_cat.estimation.groups import make_group_sample
from lognormal_cat.models.samples import GroupSample
from tests.helpers import lognormal_samples


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def null_samples(rng) -> list[GroupSample]:
    """Three groups with equal log-means η = 0 and unequal variances."""
    sigma2s = [0.5, 1.0, 2.0]
    return lognormal_samples(rng, [-s / 2 for s in sigma2s], sigma2s, [20, 20, 20])


@pytest.fixture
def separated_samples(rng) -> list[GroupSample]:
    """Three groups whose log-means differ by far more than their noise."""
    return lognormal_samples(rng, [0.0, 2.0, 4.0], [0.5, 0.5, 0.5], [30, 30, 30])


@pytest.fixture
def twin_samples(rng) -> list[GroupSample]:
    """Two groups holding exactly the same observations."""
    x = np.exp(rng.normal(0.3, 0.8, 15))
    return [make_group_sample(x), make_group_sample(x.copy())]
