import numpy as np
import pytest

import opucchain as oc

# full parameter grid of the closed-form family used across the suite
ORACLE_GRID = [
    (lam, eta, t)
    for lam in (-0.25, 0.0, 0.5, 1.0)
    for eta in (-1.0, 0.0, 1.0)
    for t in (0.0, 0.3, 0.7)
]


def random_chain_input(rng, N, c_scale=1.0):
    """Random valid input: sample a parameter sequence g_n in (0, 1) and set
    d_n = (1 - g_{n-1}) g_n, which is a positive chain sequence by
    construction."""
    g = np.empty(N + 1)
    g[0] = rng.uniform(0.0, 0.9)
    g[1:] = rng.uniform(0.05, 0.95, N)
    d = (1.0 - g[:-1]) * g[1:]
    c = rng.normal(0.0, c_scale, N)
    return oc.RecurrenceInput(c, d)


@pytest.fixture(scope="session")
def constant_input():
    """c = 0, d = 1/4 everywhere: R_n = 1 + z + ... + z^n."""
    return oc.RecurrenceInput.constant(0.25, 0.0, 70)


@pytest.fixture(scope="session")
def complex_input():
    """A representative closed-form family member with nonreal coefficients."""
    return oc.example_sequences(oc.ExampleParams(0.5, 1.0, 0.3), 70)


@pytest.fixture(scope="session")
def lebesgue_input():
    """lam = eta = t = 0: the Lebesgue measure, S_n = z^n."""
    return oc.example_sequences(oc.ExampleParams(0.0, 0.0, 0.0), 70)
