"""
Shared fixtures: the command line under the testing configuration and the
polynomials used across the suite.
"""

import itertools
import random
from fractions import Fraction

import pytest
from click.testing import CliRunner

from app import create_cli
from config.config import TestingConfig
from models.polynomial import MultiPoly
from models.reports import LambdaPoint
from utils.parser import parse_poly


@pytest.fixture
def settings():
    return TestingConfig


@pytest.fixture
def cli():
    return create_cli("testing")


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def poly():
    """Parse a polynomial in x, y."""
    return parse_poly


@pytest.fixture
def at():
    """A rational fiber value."""
    return lambda value: LambdaPoint.rational(Fraction(value))


@pytest.fixture
def example_b():
    """y^3 + x*y^2 + y: critical value at infinity 0 with exponent -2."""
    return parse_poly("y^3 + x*y^2 + y")


@pytest.fixture
def rng():
    """A seeded generator, so randomized tests are reproducible."""
    return random.Random(20240917)


@pytest.fixture
def random_poly(rng):
    """Random polynomials with small rational coefficients and bounded total degree."""

    def build(variables=("x", "y"), degree=3, density=0.6):
        terms = {}
        for exps in itertools.product(range(degree + 1), repeat=len(variables)):
            if sum(exps) <= degree and rng.random() < density:
                terms[exps] = Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))
        return MultiPoly(variables, terms)

    return build


@pytest.fixture
def random_normal_form(random_poly):
    """Random f in x, y, monic in y with deg f = deg_y f."""

    def build(degree):
        terms = random_poly(("x", "y"), degree).expanded(["x", "y"])
        terms[(0, degree)] = Fraction(1)
        return MultiPoly(("x", "y"), terms)

    return build
