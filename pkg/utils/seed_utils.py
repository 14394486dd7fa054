"""
Deterministic randomness: a master seed expands into independent
per-trial, per-attempt streams.
"""

from typing import Tuple

import numpy as np
from pydantic import BaseModel, field_validator


def derive_rng(seed: int, *stream: int) -> np.random.Generator:
    """Generator for the counter tuple (seed, *stream)"""
    return np.random.default_rng(np.random.SeedSequence([seed, *stream]))


def derive_seed(seed: int, *stream: int) -> int:
    """A reproducible 63-bit child seed, reported so a single instance can be replayed"""
    state = np.random.SeedSequence([seed, *stream]).generate_state(2, dtype=np.uint32)
    return (int(state[0]) << 31) ^ int(state[1])


class TrialConfig(BaseModel):
    """Seed plus trial-count and retry policy."""

    seed: int = 0
    trials: int = 1
    max_retries: int = 20

    @field_validator("seed")
    @classmethod
    def _seed_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("seed must be >= 0")
        return value

    @field_validator("trials")
    @classmethod
    def _trials_odd(cls, value: int) -> int:
        if value < 1 or value % 2 == 0:
            raise ValueError("trials must be an odd integer >= 1")
        return value

    def rng(self, trial: int, attempt: int = 0) -> np.random.Generator:
        return derive_rng(self.seed, trial, attempt)

    def stream_id(self, trial: int, attempt: int = 0) -> Tuple[int, int, int]:
        return (self.seed, trial, attempt)
