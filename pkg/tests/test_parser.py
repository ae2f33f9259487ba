from fractions import Fraction

import pytest

from models.laurent import LaurentPoly
from models.polynomial import MultiPoly
from models.univariate import UniPoly
from utils.exceptions import ParseError
from utils.parser import parse_curve, parse_lambda, parse_poly, parse_rational, tokenize


def test_tokens_carry_columns():
    tokens = tokenize("y^2 + x")
    assert [t.kind for t in tokens] == ["name", "caret", "int", "plus", "name", "end"]
    assert tokens[3].column == 5


def test_parses_example_polynomials():
    y, x = MultiPoly.var("y"), MultiPoly.var("x")
    assert parse_poly("y^2 + x") == y ** 2 + x
    assert parse_poly("y^3 + x*y^2 + y") == y ** 3 + x * y ** 2 + y
    assert parse_poly(" ( x - 1/2 ) * y ") == x * y - y.scale(Fraction(1, 2))


@pytest.mark.parametrize("names", [("x", "y"), ("lam", "u")])
def test_printing_parses_back(random_poly, names):
    for _ in range(50):
        p = random_poly(names, 4)
        assert parse_poly(str(p), names) == p


def test_double_caret_reports_column():
    with pytest.raises(ParseError) as info:
        parse_poly("y^^2")
    assert info.value.column == 3
    assert info.value.exit_code == 1


@pytest.mark.parametrize(
    "src, column",
    [("y + z", 5), ("2/0", 3), ("x y", 3), ("(x + y", 7), ("x + #", 5)],
)
def test_errors_point_at_the_offending_token(src, column):
    with pytest.raises(ParseError) as info:
        parse_poly(src)
    assert info.value.column == column


def test_no_negative_powers_outside_curves():
    with pytest.raises(ParseError):
        parse_poly("x^-1")


def test_curve_components():
    curve = parse_curve("t, 1/2*t^-1, -4*t")
    assert curve == [
        LaurentPoly.monomial(1, 1),
        LaurentPoly.monomial(Fraction(1, 2), -1),
        LaurentPoly.monomial(-4, 1),
    ]
    assert parse_curve("-t^2, t")[0].degree() == 2


def test_curve_rejects_other_names():
    with pytest.raises(ParseError):
        parse_curve("x, t")


def test_lambda_specs():
    assert parse_lambda("generic") == ("generic", None)
    assert parse_lambda("-3/4") == ("rational", Fraction(-3, 4))
    kind, modulus = parse_lambda("root(t^2 - 2)")
    assert kind == "root"
    assert modulus == UniPoly([-2, 0, 1])
    assert parse_rational("5") == 5


def test_lambda_root_error_column_is_absolute():
    with pytest.raises(ParseError) as info:
        parse_lambda("root(t^^2)")
    assert info.value.column == 8
