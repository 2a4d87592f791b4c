"""
Reproducible random substreams.

Every random draw in the package comes from a generator keyed by
(master seed, purpose, index, ...). numpy's SeedSequence hashes the key
into the generator state, so replicate l or experiment e always sees the
same numbers no matter which worker thread runs it or in which order.
"""
import secrets
from enum import IntEnum

import numpy as np

from lognormal_cat.errors import InvalidSeed

MAX_SEED = 2**64 - 1


class Stream(IntEnum):
    """Purpose tags; the first element of every spawn key."""

    CAT_REPLICATE = 0
    EXPERIMENT = 1
    EXPERIMENT_CAT_SEED = 2
    SUITE = 3


def substream(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=key))
    )


def derive_seed(seed: int, *key: int) -> int:
    """A 64-bit child seed for the given key."""
    state = np.random.SeedSequence(entropy=seed, spawn_key=key).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0])


def check_seed(seed: int) -> int:
    if not 0 <= seed <= MAX_SEED:
        raise InvalidSeed(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def fresh_seed() -> int:
    return secrets.randbits(64)
