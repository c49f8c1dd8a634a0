import random
from fractions import Fraction

import pytest
from hypothesis import settings

from tropdual import INF

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def to_oracle(v):
    return tuple(None if x is INF else x for x in v)


def from_oracle(v):
    return tuple(INF if x is None else Fraction(x) for x in v)


def random_ext(rng: random.Random, num=8, den=4, p_inf=0.2):
    if rng.random() < p_inf:
        return INF
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
