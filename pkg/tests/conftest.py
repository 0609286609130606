import numpy as np
import pytest

import stepdist as sd

POPULATION_SEED = 20250810
POPULATION_SIZE = 200


@pytest.fixture(scope="session")
def fb():
    return sd.bernoulli_half()


@pytest.fixture(scope="session")
def fm():
    return sd.ramp_plateau_atom()


@pytest.fixture(scope="session")
def fu():
    return sd.uniform_01()


@pytest.fixture(scope="session")
def population():
    """The acceptance population: 200 seeded random step-linear CDFs."""
    rng = np.random.default_rng(POPULATION_SEED)
    return [sd.random_cdf(rng) for _ in range(POPULATION_SIZE)]


@pytest.fixture(scope="session")
def small_population(population):
    """A cheaper slice for per-distribution loops outside the acceptance gate."""
    return population[:30]
