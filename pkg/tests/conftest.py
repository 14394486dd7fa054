import numpy as np
import pytest

from helpers.field_helpers import FieldContext


@pytest.fixture
def ctx():
    return FieldContext()


@pytest.fixture
def ctx7():
    return FieldContext(p=7)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
