from fractions import Fraction
from itertools import permutations

import pytest

from models.laurent import LaurentPoly
from models.scalars import NEG_INFINITY, ExtRational
from services.puiseux_service import PuiseuxService, newton_edges
from utils.exceptions import PreconditionError


def t(exponent, coeff=1):
    return LaurentPoly.monomial(coeff, exponent)


def off_diagonal(contact):
    return sorted(
        contact[i, j] for i in range(contact.size) for j in range(contact.size) if i < j
    )


def test_max_root_degree_linear():
    # t*x - 1 has the root 1/t
    assert PuiseuxService.newton_polygon_max_root_degree([t(1), t(0, -1)]) == -1


def test_max_root_degree_fractional():
    coefficients = [t(0), LaurentPoly(), t(3, -1)]
    assert PuiseuxService.newton_polygon_max_root_degree(coefficients) == Fraction(3, 2)


def test_max_root_degree_needs_leading_coefficient():
    with pytest.raises(PreconditionError):
        PuiseuxService.newton_polygon_max_root_degree([LaurentPoly(), t(1)])


def test_root_degrees_with_zero_root():
    # x^2 - t*x = x*(x - t)
    degrees = PuiseuxService.root_degrees([t(0), t(1, -1), LaurentPoly()])
    assert degrees == [ExtRational(1), NEG_INFINITY]


def test_root_degrees_count_multiplicity():
    degrees = PuiseuxService.root_degrees([t(0), LaurentPoly(), t(3, -1)])
    assert degrees == [Fraction(3, 2), Fraction(3, 2)]


def test_max_root_degree_matches_root_degrees(rng):
    for _ in range(100):
        coefficients = [t(rng.randint(-3, 3), rng.choice((1, -2, 3)))]
        for _ in range(rng.randint(1, 5)):
            if rng.random() < 0.3:
                coefficients.append(LaurentPoly())
            else:
                low = t(rng.randint(-3, 3), rng.randint(-4, -1))
                coefficients.append(t(rng.randint(-3, 3), rng.randint(1, 4)) + low)
        largest = PuiseuxService.newton_polygon_max_root_degree(coefficients)
        assert largest == PuiseuxService.root_degrees(coefficients)[0]


def test_newton_edges_stop_at_bound():
    degrees = [ExtRational(0), ExtRational(1), ExtRational(0)]
    k0, edges = newton_edges(degrees, bound=1)
    assert k0 == 0
    assert edges == [(0, 1, Fraction(-1))]


def test_example_b_branches(example_b, at):
    branches = PuiseuxService.puiseux_branches(example_b, at(0))
    assert branches.D == 1
    assert [b.leading_degree() for b in branches.beta] == [NEG_INFINITY, -1, 1]
    assert len(branches.gamma) == 2
    assert off_diagonal(branches.contact) == [-1, 1, 1]


def test_example_b_identities(example_b, at):
    point = at(0)
    assert PuiseuxService.cor36_exponent(example_b, point) == -2
    assert PuiseuxService.prop22_check(example_b, point) == (
        ExtRational(-1), ExtRational(-1), True
    )
    assert PuiseuxService.lemma31_exponents(example_b, point) == (0, -1)
    assert PuiseuxService.lemmad2_check(example_b, point)
    assert PuiseuxService.reconstruction_check(example_b, point)


CORPUS = [
    "y^3 + x*y^2 + y",
    "y^3 + x*y^2 + y + 1",
    "y^2 + x",
    "y^2",
    "y^2 + x*y",
    "y^4 + x*y^3 + y",
]


# Contacts are degrees of differences at infinity, so the triangle bound uses max.
@pytest.mark.parametrize("src", CORPUS)
@pytest.mark.parametrize("value", [0, 1])
def test_contact_matrix_is_ultrametric(poly, at, src, value):
    branches = PuiseuxService.puiseux_branches(poly(src), at(value))
    contact = PuiseuxService.contact_matrix(branches)
    for i, j, k in permutations(range(contact.size), 3):
        assert contact[i, j] <= max(contact[i, k], contact[k, j])


def test_ramified_branches(poly, at):
    f = poly("y^2 + x")
    branches = PuiseuxService.puiseux_branches(f, at(0))
    assert branches.D == 2
    assert off_diagonal(branches.contact) == [1]
    assert PuiseuxService.prop22_check(f, at(0)) == (ExtRational(2), ExtRational(2), True)


def test_lemma31_off_lambda(poly, at):
    f = poly("y^2 + x")
    assert PuiseuxService.lemma31_exponents(f, at(3)) == (Fraction(1, 2), 1)


def test_cor36_needs_critical_value(poly, at):
    with pytest.raises(PreconditionError):
        PuiseuxService.cor36_exponent(poly("y^2 + x"), at(0))


def test_coincident_branches(poly, at):
    f = poly("y^2")
    point = at(0)
    assert PuiseuxService.prop22_check(f, point) == (NEG_INFINITY, NEG_INFINITY, True)
    assert PuiseuxService.lemma31_exponents(f, point) == (NEG_INFINITY, NEG_INFINITY)
    assert PuiseuxService.cor36_exponent(f, point) == NEG_INFINITY


def test_oracle_needs_degree_two(poly, at):
    with pytest.raises(PreconditionError):
        PuiseuxService.puiseux_branches(poly("y + x^2"), at(0))


def test_cross_check_agrees(example_b, at):
    reports = PuiseuxService.cross_check(example_b, at(0))
    assert len(reports) == 1
    assert reports[0].all_agree
    assert reports[0].cor36 == -2
