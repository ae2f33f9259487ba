from fractions import Fraction

import pytest
import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from models.polynomial import MultiPoly
from models.reports import FiberProfile
from models.scalars import NEG_INFINITY
from services.resultant_service import (
    ResultantService,
    bareiss_determinant,
    cofactor_determinant,
    specialize,
    sylvester_matrix,
)
from utils.exceptions import PreconditionError
from utils.parser import parse_poly

NAMES = ("x", "y", "lam", "u", "tau")


def p(src):
    return parse_poly(src, NAMES)


def test_small_resultants():
    assert ResultantService.resultant_y(p("y^2 + x - lam"), p("2*y - u")) == p("4*x + u^2 - 4*lam")
    assert ResultantService.resultant_y(p("y^2 - tau"), p("y")) == p("-tau")


def test_resultant_preconditions():
    with pytest.raises(PreconditionError):
        ResultantService.resultant_y(MultiPoly(), p("y"))
    with pytest.raises(PreconditionError):
        ResultantService.resultant_y(p("x"), p("x + 1"))


def test_sylvester_matrix_layout():
    matrix = sylvester_matrix(p("y^2 + x"), p("2*y - u"))
    assert len(matrix) == 3
    assert matrix[0] == [MultiPoly.constant(1), MultiPoly(), p("x")]
    assert matrix[1] == [MultiPoly.constant(2), p("-u"), MultiPoly()]


def test_determinants_of_known_matrices():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[p("x"), 1], [1, p("x")]]) == p("x^2 - 1")
    assert bareiss_determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_bareiss_agrees_with_cofactor_expansion(rng, random_normal_form):
    for _ in range(100):
        a = random_normal_form(rng.randint(1, 3))
        b = random_normal_form(rng.randint(1, 3))
        matrix = sylvester_matrix(a, b)
        assert bareiss_determinant(matrix) == cofactor_determinant(matrix)


def test_profile_of_y2_plus_x():
    profile = ResultantService.resultant_profile(parse_poly("y^2 + x"))
    assert profile.n == 2
    assert profile.N == 1
    assert profile.coefficients == (p("4"), p("u^2 - 4*lam"))


def test_profile_of_y2_plus_xy():
    profile = ResultantService.resultant_profile(parse_poly("y^2 + x*y"))
    assert profile.coefficients == (p("-1"), MultiPoly(), p("u^2 - 4*lam"))
    assert profile.q0.deg_in("u") == 0


def test_profile_of_y2_has_no_x():
    profile = ResultantService.resultant_profile(parse_poly("y^2"))
    assert profile.N == 0
    assert profile.q0 == p("u^2 - 4*lam")


def test_profile_needs_normal_form():
    with pytest.raises(PreconditionError):
        ResultantService.resultant_profile(parse_poly("x*y"))


def test_profile_polynomial_round_trips(example_b):
    profile = ResultantService.resultant_profile(example_b)
    q = ResultantService.resultant_y(example_b - p("lam"), example_b.derivative("y") - p("u"))
    assert profile.polynomial() == q


@pytest.mark.parametrize(
    "profile, value, case",
    [
        (FiberProfile((p("tau^2"),)), NEG_INFINITY, "IV"),
        (FiberProfile((p("tau^2 - 4"),)), 0, "II"),
        (FiberProfile((p("4"), p("tau^2"))), Fraction(1, 2), "I"),
        (FiberProfile((p("tau"), p("1"))), -1, "III"),
        (FiberProfile((p("tau^4"), p("tau^2"), p("1"))), Fraction(-1, 2), "III"),
    ],
)
def test_lemma_lp_cases(profile, value, case):
    result = ResultantService.lemma_lp_exponent(profile)
    assert result.case == case
    assert result.value == value


def test_fiber_profiles():
    profile = ResultantService.fiber_profile(p("2*y"), p("y^2"))
    assert profile.coefficients == (p("tau^2"),)
    assert ResultantService.lemma_lp_exponent(profile).case == "IV"
    profile = ResultantService.fiber_profile(p("2*y"), p("y^2 - 1"))
    assert ResultantService.lemma_lp_exponent(profile).value == 0


def test_fiber_profile_specializes_lam():
    profile = ResultantService.fiber_profile(p("2*y"), p("y^2 + x - lam"), Fraction(0))
    assert profile.coefficients == (p("4"), p("tau^2"))
    assert ResultantService.lemma_lp_exponent(profile).value == Fraction(1, 2)


def test_fiber_profile_needs_deg_h_in_y():
    with pytest.raises(PreconditionError):
        ResultantService.fiber_profile(p("y"), p("x^2 + y"))



def to_sympy(poly):
    return parse_expr(str(poly), transformations=standard_transformations + (convert_xor,))


@pytest.mark.parametrize(
    "src", ["y^2 + x", "y^3 + x*y^2 + y", "y^3 - 3*y + x^2", "y^4 + x^2*y - x"]
)
def test_profile_matches_sympy(src):
    f = p(src)
    ours = ResultantService.resultant_y(f - p("lam"), f.derivative("y") - p("u"))
    y, lam, u = sympy.symbols("y lam u")
    g = to_sympy(f)
    theirs = sympy.resultant(g - lam, sympy.diff(g, y) - u, y)
    assert sympy.expand(to_sympy(ours) - theirs) == 0


def test_specialization_commutes_with_resultant(rng, random_normal_form):
    for _ in range(10):
        f = random_normal_form(rng.randint(2, 4))
        profile = ResultantService.resultant_profile(f)
        lambda0 = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        u0 = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        direct = ResultantService.resultant_y(f - lambda0, f.derivative("y") - u0)
        assert specialize(profile.polynomial(), lambda0, u0) == direct


def test_lemma_lp_ignores_sign(rng, random_normal_form):
    for _ in range(10):
        f = random_normal_form(rng.randint(2, 4))
        lambda0 = Fraction(rng.randint(-3, 3))
        profile = ResultantService.fiber_profile(f - p("lam"), f.derivative("y"), lambda0)
        negated = FiberProfile(tuple(c.scale(-1) for c in profile.coefficients))
        expected = ResultantService.lemma_lp_exponent(profile)
        assert ResultantService.lemma_lp_exponent(negated) == expected
