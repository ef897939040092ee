import random
from fractions import Fraction

import pytest

from linv import make_field


@pytest.fixture
def q5():
    return make_field(5)


@pytest.fixture
def q7():
    return make_field(7)


@pytest.fixture
def q5_ext():
    """Unramified quadratic extension of Q_5."""
    return make_field(5, 2)


def rand_element(field, rng: random.Random, vmin=-2, vmax=4):
    """A random nonzero field element with coefficient valuations in range."""
    while True:
        coeffs = [
            Fraction(rng.randrange(0, field.p ** 4)) * Fraction(field.p) ** rng.randrange(vmin, vmax + 1)
            for _ in range(field.degree)
        ]
        a = field.element(coeffs)
        if a.valuation() is not None:
            return a


def rand_unit(field, rng: random.Random):
    """A random unit (valuation zero)."""
    while True:
        a = field.element([rng.randrange(0, field.p ** 6) for _ in range(field.degree)])
        if a.valuation() == 0:
            return a


def rand_principal_unit(field, rng: random.Random):
    """A random principal unit: 1 + (something of valuation >= 1)."""
    bump = field.element(
        [field.p * rng.randrange(0, field.p ** 5) for _ in range(field.degree)]
    )
    return field.one() + bump
