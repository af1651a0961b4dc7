import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wittlab.coeff import FreeLambda, Integers

settings.register_profile(
    "wittlab", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("wittlab")

ZZ = Integers()


def int_vectors(N, bound=4):
    return st.lists(st.integers(-bound, bound), min_size=N, max_size=N).map(tuple)


def free_elements(R: FreeLambda, rng: random.Random, count: int, **kw):
    return tuple(R.random_element(rng, **kw) for _ in range(count))


@pytest.fixture
def rng():
    return random.Random(20261015)
