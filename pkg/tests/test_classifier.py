from fractions import Fraction

import pytest

from models.algebraic import Tower, resolve_splits
from models.reports import LambdaPoint
from models.scalars import NEG_INFINITY
from models.univariate import UniPoly
from services.classifier_service import ClassifierService
from utils.exceptions import PreconditionError, UsageError
from utils.parser import parse_poly


def family_b(n):
    """y^(n+1) + x*y^n + y."""
    return parse_poly(f"y^{n + 1} + x*y^{n} + y")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_example_b_family(n, at):
    f = family_b(n)
    generic, special = ClassifierService.exponent_function(f)
    assert generic.value == Fraction(1, n)
    assert generic.case == "T47"
    assert [record.lambda_point for record in special] == [at(0)]
    assert special[0].value == -1 - Fraction(1, n - 1)
    assert special[0].case == "T41_ii"


def test_y_squared(at, poly):
    f = poly("y^2")
    generic, special = ClassifierService.exponent_function(f)
    assert (generic.value, generic.case) == (0, "T48")
    assert len(special) == 1
    assert (special[0].value, special[0].case) == (NEG_INFINITY, "T41_i")
    assert ClassifierService.exponent_at(f, at(0)).in_lambda


def test_y_squared_plus_x_has_generic_one_half(poly):
    f = poly("y^2 + x")
    assert ClassifierService.lambda_set(f) == []
    assert ClassifierService.generic_exponent(f).value == Fraction(1, 2)


def test_normal_form_of_xy(poly):
    assert ClassifierService.generic_exponent(poly("y^2 + x*y")).value == 1
    assert ClassifierService.lambda_set(poly("y^2 + x^2")) == []


def test_values_off_lambda_equal_the_generic_value(example_b, at):
    generic = ClassifierService.generic_exponent(example_b).value
    for value in (1, -1, 2, Fraction(1, 3), -5):
        record = ClassifierService.exponent_at(example_b, at(value))
        assert not record.in_lambda
        assert record.value == generic


def test_generic_point_needs_generic_exponent(example_b):
    with pytest.raises(UsageError):
        ClassifierService.exponent_at(example_b, LambdaPoint.generic())
    records = ClassifierService.exponent_records(example_b, LambdaPoint.generic())
    assert records[0].value == Fraction(1, 2)


def test_fiber_comparisons(example_b, poly, at):
    comparison = ClassifierService.compare_at(example_b, at(0))
    assert (comparison.near, comparison.on_fiber, comparison.relation) == (-2, 0, "strictly_less")
    comparison = ClassifierService.compare_at(poly("y^2"), at(0))
    assert (comparison.near, comparison.on_fiber) == (NEG_INFINITY, NEG_INFINITY)
    assert comparison.relation == "equal"
    comparison = ClassifierService.compare_at(poly("y^2"), at(5))
    assert (comparison.near, comparison.on_fiber, comparison.relation) == (0, 0, "equal")


def test_comparison_on_y2_plus_x(poly, at):
    comparison = ClassifierService.compare_at(poly("y^2 + x"), at(0))
    assert comparison.near == Fraction(1, 2)
    assert comparison.on_fiber == Fraction(1, 2)
    assert comparison.relation == "equal"


def test_pair_exponent_identity(example_b, at):
    pair = ClassifierService.pair_exponent_if_negative(example_b, at(0))
    assert pair == -1
    assert ClassifierService.exponent_at(example_b, at(0)).value == pair - 1
    assert ClassifierService.critical_exponent(example_b, at(0)) == -1
    assert ClassifierService.fiber_exponent_at(example_b, at(0)) == 0


def test_pair_exponent_identity_on_random_family(rng, at):
    for _ in range(10):
        n = rng.randint(2, 4)
        c = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.choice((1, 2)))
        a = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.choice((1, 3)))
        b = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
        top = parse_poly(f"y^{n + 1}") + parse_poly(f"x*y^{n}").scale(c)
        f = top + parse_poly("y").scale(a) + b
        point = at(b)
        assert point in ClassifierService.lambda_set(f)
        pair = ClassifierService.pair_exponent_if_negative(f, point)
        assert ClassifierService.exponent_at(f, point).value == pair - 1


def test_pair_exponent_needs_a_critical_value(example_b, at):
    with pytest.raises(PreconditionError):
        ClassifierService.pair_exponent_if_negative(example_b, at(1))


def test_kinf_fedorjuk_and_global_exponent(example_b, poly, at):
    k_inf, fedorjuk = ClassifierService.kinf_and_fedorjuk(example_b)
    assert k_inf == fedorjuk == [at(0)]
    assert ClassifierService.global_gradient_exponent(example_b).value == -2
    assert not ClassifierService.global_gradient_exponent(poly("y^2 + x")).determined
    assert ClassifierService.global_gradient_exponent(poly("y^2")).value == NEG_INFINITY


def test_bifurcation_sets(example_b, poly, at):
    assert ClassifierService.bifurcation_set(example_b) == ([], [at(0)])
    assert ClassifierService.bifurcation_set(poly("y^2 + x^2")) == ([at(0)], [at(0)])
    assert ClassifierService.bifurcation_set(poly("y^2")) == ([at(0)], [at(0)])
    assert ClassifierService.bifurcation_set(poly("y^2 + x")) == ([], [])


def test_algebraic_point_off_lambda(poly):
    point = LambdaPoint.root(UniPoly([-1, 0, 1]))
    records = ClassifierService.exponent_records(poly("y^2"), point)
    assert len(records) == 1
    assert records[0].value == 0
    assert records[0].lambda_point == point


@pytest.mark.parametrize("reverse", [False, True])
def test_algebraic_point_splits_on_lambda(poly, reverse):
    f = poly("y^2")
    point = LambdaPoint.root(UniPoly([0, -1, 0, 1]))  # t^3 - t
    results = resolve_splits(
        lambda tower: ClassifierService.exponent_at(f, point.with_tower(tower)),
        point.tower,
        reverse=reverse,
    )
    by_value = {str(record.lambda_point): record.value for _, record in results}
    assert by_value == {"0": NEG_INFINITY, "root(t^2 - 1)": 0}


def test_with_tower_makes_linear_moduli_rational():
    point = LambdaPoint.root(UniPoly([0, -1, 0, 1]))
    linear = Tower().extend((Fraction(-3), Fraction(1)))
    assert point.with_tower(linear) == LambdaPoint.rational(3)
