import numpy as np
import pytest

from divalg.core import classical


@pytest.fixture(scope="session")
def C():
    return classical("C")


@pytest.fixture(scope="session")
def H():
    return classical("H")


@pytest.fixture(scope="session")
def O():
    return classical("O")


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
