import numpy as np
import pytest
from pydantic import ValidationError

from utils.seed_utils import TrialConfig, derive_rng, derive_seed


def test_streams_are_reproducible_and_distinct():
    assert derive_rng(7, 1, 0).integers(0, 2**62) == derive_rng(7, 1, 0).integers(0, 2**62)
    draws = {int(derive_rng(7, trial, attempt).integers(0, 2**62)) for trial in range(5) for attempt in range(5)}
    assert len(draws) == 25


def test_derive_seed():
    seeds = [derive_seed(3, i) for i in range(100)]
    assert seeds == [derive_seed(3, i) for i in range(100)]
    assert len(set(seeds)) == 100
    assert all(0 <= s < 2**63 for s in seeds)
    assert derive_seed(3, 0) != derive_seed(4, 0)


def test_trial_config():
    config = TrialConfig(seed=5, trials=3)
    assert config.stream_id(2, 1) == (5, 2, 1)
    a = config.rng(2, 1).integers(0, 1000, size=8)
    b = derive_rng(5, 2, 1).integers(0, 1000, size=8)
    assert np.array_equal(a, b)
    assert TrialConfig().max_retries == 20


@pytest.mark.parametrize("kwargs", [{"trials": 2}, {"trials": 0}, {"seed": -1}])
def test_trial_config_rejects(kwargs):
    with pytest.raises(ValidationError):
        TrialConfig(**kwargs)
