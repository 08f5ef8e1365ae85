import random

import pytest

import qheis
from qheis.coeffs import Coefficient

C = Coefficient

COEFF_POOL_TEXT = (
    "1", "2", "-3", "1/2", "i", "-i", "q", "q^-1", "q^(1/2)", "q^(-3/2)",
    "p", "p^-1", "p^(1/2)", "hbar", "hbar^-1", "i*hbar", "2*q*i",
    "q - 1", "q + p^-1", "i*(q^(1/2) - q^(-1/2))",
)


@pytest.fixture(scope="session")
def coeff_pool():
    return [qheis.parse_expr(t).coefficient(()) for t in COEFF_POOL_TEXT]


def make_rng(seed=20260810):
    return random.Random(seed)


@pytest.fixture
def rng():
    return make_rng()


@pytest.fixture(scope="session")
def families():
    return {fam: qheis.catalog(fam) for fam in qheis.family_ids()}
