"""
Shared pytest fixtures: the shipped constants table and a seeded RNG.
"""

import random

import pytest

from constants import default_table
from fields import prime_power

SEED = 20240611


@pytest.fixture
def table():
    return default_table()


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def q2():
    return prime_power(2)
