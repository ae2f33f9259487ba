"""
Exact algebra operations on polynomials: orders of vanishing, squarefree
decompositions, rational roots and compositions with Laurent curves.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

import sympy
from sympy import QQ, Poly

from models.algebraic import decide_zero, inverse
from models.laurent import LaurentPoly
from models.polynomial import MultiPoly
from models.scalars import POS_INFINITY, ExtRational
from models.univariate import UniPoly

Biv = List[UniPoly]


class AlgebraService:
    """Service for exact algebra on polynomials."""

    @staticmethod
    def ord_at(poly: MultiPoly, lambda0, lam: str = "lam", u: str = "u"):
        """
        Order of vanishing of poly(lam, u) at the point (lambda0, 0).

        Args:
            poly: polynomial in lam and u only.
            lambda0: Fraction or AlgebraicScalar.

        Returns:
            the minimal total degree of poly(lambda0 + s, u) in (s, u), or
            POS_INFINITY for the zero polynomial.
        """
        if set(poly.variables) - {lam, u}:
            raise ValueError(f"{poly} is not a polynomial in {lam}, {u}")
        if poly.is_zero:
            return POS_INFINITY
        shifted = poly.substitute({lam: MultiPoly.var(lam) + MultiPoly.constant(lambda0)})
        by_degree: Dict[int, list] = {}
        for exps, coeff in shifted.terms.items():
            by_degree.setdefault(sum(exps), []).append(coeff)
        for degree in sorted(by_degree):
            if any(not decide_zero(c) for c in by_degree[degree]):
                return degree
        return POS_INFINITY

    @staticmethod
    def squarefree_part(poly: MultiPoly) -> MultiPoly:
        """p / gcd(p, p'), monic."""
        name, uni = _univariate(poly)
        if uni.is_zero:
            raise ValueError("squarefree part of the zero polynomial")
        return squarefree_part(uni).to_multipoly(name)

    @staticmethod
    def rational_roots(poly: MultiPoly) -> Tuple[Set[Fraction], MultiPoly]:
        """Rational roots without multiplicity and the rational-root-free residual."""
        name, uni = _univariate(poly)
        roots, residual = rational_roots(uni)
        return set(roots), residual.to_multipoly(name)

    @staticmethod
    def eval_on_curve(
        poly: MultiPoly, curve: Sequence[LaurentPoly], names: Optional[Sequence[str]] = None
    ) -> LaurentPoly:
        """Compose poly with a Laurent curve; names[i] is sent to curve[i]."""
        names = list(names) if names is not None else list(poly.variables)
        if len(names) != len(curve):
            raise ValueError(f"{len(curve)} components for {len(names)} variables")
        missing = set(poly.variables) - set(names)
        if missing:
            raise ValueError(f"no curve component for {sorted(missing)}")
        parameter = curve[0].parameter if curve else "t"
        indices = [names.index(v) for v in poly.variables]
        powers: Dict[Tuple[int, int], LaurentPoly] = {}
        result = LaurentPoly(parameter=parameter)
        for exps, coeff in poly.terms.items():
            term = LaurentPoly.constant(coeff, parameter)
            for index, e in zip(indices, exps):
                if e:
                    if (index, e) not in powers:
                        powers[(index, e)] = curve[index] ** e
                    term = term * powers[(index, e)]
            result = result + term
        return result

    @staticmethod
    def laurent_degree(series: LaurentPoly) -> ExtRational:
        return series.degree()

    @staticmethod
    def squarefree_factors_y(poly: MultiPoly) -> List[Tuple[MultiPoly, int]]:
        """Squarefree decomposition in y of a polynomial monic in y over K[x]."""
        if _rational_in_xy(poly) and poly.deg_in("y") > 0:
            _, factors = _xy_to_sympy(poly).sqf_list()
            return [
                (_monic_in_y(_xy_from_sympy(factor)), k)
                for factor, k in factors
                if factor.degree(_Y) > 0
            ]
        biv = _biv_from(poly)
        if not biv or len(biv) == 1:
            raise ValueError(f"{poly} has no positive degree in y")
        return [(_biv_to(factor), mult) for factor, mult in _biv_yun(biv)]

    @staticmethod
    def gcd_y(a: MultiPoly, b: MultiPoly) -> MultiPoly:
        """Monic gcd in y of two polynomials of K[x][y] (a monic in y)."""
        if _rational_in_xy(a) and _rational_in_xy(b) and not (a.is_zero or b.is_zero):
            return _monic_in_y(_xy_from_sympy(_xy_to_sympy(a).gcd(_xy_to_sympy(b))))
        return _biv_to(_biv_gcd(_biv_from(a), _biv_from(b)))

    @staticmethod
    def divide_y(a: MultiPoly, b: MultiPoly) -> MultiPoly:
        """Exact quotient of a by b, b monic in y."""
        return _biv_to(_biv_divide(_biv_from(a), _biv_from(b)))


# Univariate helpers


def _univariate(poly: MultiPoly) -> Tuple[str, UniPoly]:
    if len(poly.variables) > 1:
        raise ValueError(f"{poly} is not univariate")
    name = poly.variables[0] if poly.variables else "t"
    return name, UniPoly.from_multipoly(poly, name)


# Polynomials over Q go through sympy; tower coefficients stay on the dynamic evaluation path

_T = sympy.Symbol("t")
_X, _Y = sympy.symbols("x y")


def _to_sympy(poly: UniPoly) -> Poly:
    return Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.coeffs)],
                _T, domain=QQ)


def _from_sympy(poly: Poly) -> UniPoly:
    return UniPoly([Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())])


def _is_rational(poly: MultiPoly) -> bool:
    return all(isinstance(c, Fraction) for c in poly.terms.values())


def _rational_in_xy(poly: MultiPoly) -> bool:
    return _is_rational(poly) and set(poly.variables) <= {"x", "y"}


def _xy_to_sympy(poly: MultiPoly) -> Poly:
    names = poly.variables
    terms = {}
    for exps, coeff in poly.terms.items():
        powers = dict(zip(names, exps))
        terms[(powers.get("y", 0), powers.get("x", 0))] = sympy.Rational(
            coeff.numerator, coeff.denominator
        )
    return Poly.from_dict(terms, _Y, _X, domain=QQ)


def _xy_from_sympy(poly: Poly) -> MultiPoly:
    return MultiPoly(
        ("y", "x"), {exps: Fraction(int(c.p), int(c.q)) for exps, c in poly.terms()}
    )


def _monic_in_y(poly: MultiPoly) -> MultiPoly:
    lead = poly.coefficients_in("y")[-1]
    if not lead.is_constant:
        raise ValueError("gcd of monic polynomials must have a constant leading coefficient")
    return poly.scale(1 / lead.constant_value())


def squarefree_part(poly: UniPoly) -> UniPoly:
    poly = poly.certified()
    if poly.degree <= 0:
        return UniPoly([1])
    if poly.is_rational():
        return _from_sympy(_to_sympy(poly).sqf_part()).monic()
    return poly.exact_div(UniPoly.gcd(poly, poly.derivative())).monic()


def squarefree_decomposition(poly: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Monic factors f_i of multiplicity i, constant ones omitted."""
    poly = poly.certified().monic()
    if poly.degree <= 0:
        return []
    if poly.is_rational():
        _, factors = _to_sympy(poly).sqf_list()
        return [(_from_sympy(factor).monic(), k) for factor, k in factors if factor.degree() > 0]
    # Yun's algorithm over a tower
    result = []
    a = UniPoly.gcd(poly, poly.derivative())
    b = poly.exact_div(a)
    c = poly.derivative().exact_div(a)
    d = c - b.derivative()
    multiplicity = 1
    while b.certified().degree > 0:
        a = UniPoly.gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            result.append((a, multiplicity))
        multiplicity += 1
    return result


def rational_roots(poly: UniPoly) -> Tuple[List[Fraction], UniPoly]:
    """Rational roots of a polynomial over Q and the residual after removing them."""
    if poly.is_zero:
        raise ValueError("rational roots of the zero polynomial")
    if not poly.is_rational():
        raise ValueError("rational roots need rational coefficients")
    roots: List[Fraction] = []
    residual = poly
    if poly.degree > 0:
        _, factors = _to_sympy(poly).factor_list()
        for factor, multiplicity in factors:
            if factor.degree() != 1:
                continue
            a, b = factor.all_coeffs()
            root = -Fraction(int(b.p), int(b.q)) / Fraction(int(a.p), int(a.q))
            roots.append(root)
            for _ in range(multiplicity):
                residual = residual.exact_div(UniPoly([-root, 1]))
    logging.debug("Rational roots %s, residual degree %d", roots, residual.degree)
    return sorted(roots), residual


# Polynomials in y over K[x], as lists of UniPoly in x indexed by the power of y


def _poly_is_zero(poly: UniPoly) -> bool:
    return all(decide_zero(c) for c in poly.coeffs)


def _biv_trim(biv: Biv) -> Biv:
    biv = list(biv)
    while biv and _poly_is_zero(biv[-1]):
        biv.pop()
    return biv


def _biv_from(poly: MultiPoly) -> Biv:
    return [UniPoly.from_multipoly(c, "x") for c in poly.coefficients_in("y")]


def _biv_to(biv: Biv) -> MultiPoly:
    return MultiPoly.from_coefficients("y", [c.to_multipoly("x") for c in biv])


def _biv_derivative(biv: Biv) -> Biv:
    return [c.scale(k) for k, c in enumerate(biv)][1:]


def _biv_sub(a: Biv, b: Biv) -> Biv:
    size = max(len(a), len(b))
    zero = UniPoly()
    return _biv_trim(
        [(a[k] if k < len(a) else zero) - (b[k] if k < len(b) else zero) for k in range(size)]
    )


def _biv_prem(a: Biv, b: Biv) -> Biv:
    remainder = _biv_trim(a)
    lead = b[-1]
    while len(remainder) >= len(b):
        shift = len(remainder) - len(b)
        top = remainder[-1]
        scaled = [c * lead for c in remainder]
        subtrahend = [UniPoly()] * shift + [c * top for c in b]
        remainder = _biv_sub(scaled, subtrahend)
    return remainder


def _biv_primitive(biv: Biv) -> Biv:
    content = UniPoly()
    for c in biv:
        if not c.is_zero:
            content = c.monic() if content.is_zero else UniPoly.gcd(content, c)
    if content.degree <= 0:
        return biv
    return [c.exact_div(content) for c in biv]


def _biv_gcd(a: Biv, b: Biv) -> Biv:
    a, b = _biv_trim(a), _biv_trim(b)
    if len(a) < len(b):
        a, b = b, a
    if not b:
        result = _biv_primitive(a)
    else:
        while True:
            remainder = _biv_prem(a, b)
            if not remainder:
                result = _biv_primitive(b)
                break
            if len(remainder) == 1:
                return [UniPoly([1])]
            a, b = b, _biv_primitive(remainder)
    lead = result[-1].certified()
    if lead.degree != 0:
        raise ValueError("gcd of monic polynomials must have a constant leading coefficient")
    factor = inverse(lead.coeffs[0])
    return [c.scale(factor) for c in result]


def _biv_divide(a: Biv, b: Biv) -> Biv:
    """Exact division by b monic in y."""
    b = _biv_trim(b)
    remainder = _biv_trim(a)
    quotient = [UniPoly()] * max(len(remainder) - len(b) + 1, 0)
    while len(remainder) >= len(b):
        shift = len(remainder) - len(b)
        top = remainder[-1]
        quotient[shift] = top
        remainder = _biv_sub(remainder, [UniPoly()] * shift + [c * top for c in b])
    if remainder:
        raise ValueError("inexact division in K[x][y]")
    return quotient


def _biv_yun(poly: Biv) -> List[Tuple[Biv, int]]:
    derivative = _biv_derivative(poly)
    a = _biv_gcd(poly, derivative)
    b = _biv_divide(poly, a)
    c = _biv_divide(derivative, a)
    d = _biv_sub(c, _biv_derivative(b))
    result = []
    multiplicity = 1
    while len(b) > 1:
        a = _biv_gcd(b, d)
        b = _biv_divide(b, a)
        c = _biv_divide(d, a)
        d = _biv_sub(c, _biv_derivative(b))
        if len(a) > 1:
            result.append((a, multiplicity))
        multiplicity += 1
    return result
