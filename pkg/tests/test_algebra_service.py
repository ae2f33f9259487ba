from fractions import Fraction

import pytest

from models.algebraic import Tower
from models.laurent import LaurentPoly
from models.polynomial import MultiPoly
from models.scalars import POS_INFINITY
from models.univariate import UniPoly
from services.algebra_service import (
    AlgebraService,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
)
from utils.parser import parse_poly


def lam_u(src):
    return parse_poly(src, ("lam", "u"))


def test_ord_at_examples():
    assert AlgebraService.ord_at(lam_u("u^2 - 4*lam"), Fraction(0)) == 1
    assert AlgebraService.ord_at(lam_u("u^2 - 4*lam"), Fraction(1)) == 0
    assert AlgebraService.ord_at(MultiPoly(), Fraction(0)) is POS_INFINITY
    assert AlgebraService.ord_at(lam_u("(lam - 2)^3 + u^2*(lam - 2)"), Fraction(2)) == 3


def test_ord_at_algebraic_point():
    root = Tower().extend((Fraction(-2), Fraction(0), Fraction(1))).generator(1)
    assert AlgebraService.ord_at(lam_u("lam^2 - 2 + u"), root) == 1


def test_squarefree_part():
    p = UniPoly([0, 0, -1, 1])  # t^2 (t - 1)
    assert squarefree_part(p) == UniPoly([0, -1, 1])
    assert squarefree_part(UniPoly([1, 0, 1])) == UniPoly([1, 0, 1])
    lam = parse_poly("lam^2*(lam - 1)", ("lam",))
    assert AlgebraService.squarefree_part(lam) == parse_poly("lam^2 - lam", ("lam",))


def test_squarefree_decomposition_multiplicities():
    p = UniPoly([0, 0, -1, 1])  # t^2 (t - 1)
    assert dict((m, f) for f, m in squarefree_decomposition(p)) == {
        1: UniPoly([-1, 1]),
        2: UniPoly([0, 1]),
    }


def test_rational_roots_and_residual():
    # (2t - 1)(t + 3)(t^2 + 1)
    p = UniPoly([-3, 5, 2]) * UniPoly([1, 0, 1])
    roots, residual = rational_roots(p)
    assert roots == [Fraction(-3), Fraction(1, 2)]
    assert residual.degree == 2
    assert residual.monic() == UniPoly([1, 0, 1])


def test_eval_on_curve_degree():
    f = parse_poly("x*y - 1")
    curve = [LaurentPoly.monomial(1, 2), LaurentPoly.monomial(1, -2) + LaurentPoly.monomial(1, -3)]
    value = AlgebraService.eval_on_curve(f, curve, ["x", "y"])
    assert value == LaurentPoly.monomial(1, -1)


def test_eval_on_curve_needs_every_variable():
    with pytest.raises(ValueError):
        AlgebraService.eval_on_curve(parse_poly("x*y"), [LaurentPoly.monomial(1, 1)], ["x"])


def test_bivariate_squarefree_factors():
    f = parse_poly("(y - x)^2*(y + 1)")
    factors = {mult: factor for factor, mult in AlgebraService.squarefree_factors_y(f)}
    assert factors == {1: parse_poly("y + 1"), 2: parse_poly("y - x")}


def test_bivariate_gcd_and_division():
    a = parse_poly("(y - x)*(y + 2)")
    b = parse_poly("(y - x)*(y - 3)")
    assert AlgebraService.gcd_y(a, b) == parse_poly("y - x")
    assert AlgebraService.divide_y(a, parse_poly("y - x")) == parse_poly("y + 2")


def test_rational_roots_with_large_leading_coefficient():
    p = UniPoly([-1, 0, 2 * 1000000007 * 1000000009])
    roots, residual = rational_roots(p)
    assert roots == []
    assert residual == p


def test_rational_root_with_large_prime_denominator():
    # (1000000007 t - 1000000009)(t^2 + 1)
    p = UniPoly([-1000000009, 1000000007]) * UniPoly([1, 0, 1])
    roots, residual = rational_roots(p)
    assert roots == [Fraction(1000000009, 1000000007)]
    assert residual.monic() == UniPoly([1, 0, 1])


def test_rational_roots_are_counted_once():
    p = UniPoly([-1, 1]) * UniPoly([-1, 1]) * UniPoly([-1, 1]) * UniPoly([2, 1])
    roots, residual = rational_roots(p)
    assert roots == [Fraction(-2), Fraction(1)]
    assert residual.degree == 0


def test_degrees_add_under_products(random_poly):
    for _ in range(100):
        a, b = random_poly(), random_poly()
        if a.is_zero or b.is_zero:
            continue
        for name in ("x", "y"):
            assert (a * b).deg_in(name) == a.deg_in(name) + b.deg_in(name)


def test_orders_add_under_products(rng, random_poly):
    for _ in range(100):
        lambda0 = Fraction(rng.randint(-2, 2))
        shift = lam_u("lam") - lambda0
        a = random_poly(("lam", "u"), 2) * shift ** rng.randint(0, 2)
        b = random_poly(("lam", "u"), 2) * shift ** rng.randint(0, 2)
        if a.is_zero or b.is_zero:
            continue
        expected = AlgebraService.ord_at(a, lambda0) + AlgebraService.ord_at(b, lambda0)
        assert AlgebraService.ord_at(a * b, lambda0) == expected
