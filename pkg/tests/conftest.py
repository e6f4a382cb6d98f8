import os
import random
from fractions import Fraction

import numpy as np
import pytest

# keep test runs from writing log files into the working tree
os.environ.setdefault("SEMIQUANT_LOG_DIR", "")
os.environ.setdefault("SEMIQUANT_LOG_CONSOLE", "false")

from semiquant.backend.engine.algebra import Dims, GaussianRational, Observable, Scalar  # noqa: E402


def random_gaussian_rational(rng: random.Random, real_only: bool = False) -> GaussianRational:
    re_ = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    im = 0 if real_only else Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    if re_ == 0 and im == 0:
        re_ = Fraction(1)
    return GaussianRational(re_, im)


def random_monomial(rng: random.Random, dims: Dims, max_degree: int, classical: bool = True, quantum: bool = True):
    degree = rng.randint(0, max_degree)
    m = [0] * dims.width
    slots = []
    if quantum:
        slots += list(range(2 * dims.n_q))
    if classical:
        slots += list(range(2 * dims.n_q, dims.width))
    for _ in range(degree):
        if slots:
            m[rng.choice(slots)] += 1
    return tuple(m)


def random_observable(
    rng: random.Random,
    dims: Dims = Dims(1, 1),
    max_degree: int = 3,
    n_terms: int = 3,
    classical: bool = True,
    quantum: bool = True,
    with_hbar: bool = True,
    real_only: bool = False,
) -> Observable:
    coeffs = {}
    for _ in range(n_terms):
        m = random_monomial(rng, dims, max_degree, classical=classical, quantum=quantum)
        value = random_gaussian_rational(rng, real_only=real_only)
        hbar = rng.randint(0, 1) if with_hbar else 0
        coeffs[m] = coeffs.get(m, Scalar()) + Scalar.monomial(value, hbar=hbar)
    return Observable(coeffs, dims)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def np_rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def make_observable():
    return random_observable
