import numpy as np
import pytest

from grouplab import parse_group
from grouplab.automorphisms import automorphism_group


@pytest.fixture(scope="session")
def grp():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = parse_group(spec)
        return cache[spec]
    return get


@pytest.fixture(scope="session")
def aut(grp):
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = automorphism_group(grp(spec))
        return cache[spec]
    return get


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
