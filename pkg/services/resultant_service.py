"""
Resultant service: Sylvester resultants, the resultant profile Q(x, lam, u) and the
fiber profile R(x, tau), and the four-case exponent formula on a fiber profile.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence

from models.algebraic import decide_zero
from models.polynomial import MultiPoly
from models.reports import FiberProfile, LemmaLP, ResultantProfile
from models.scalars import NEG_INFINITY, POS_INFINITY, ExtRational, ext_max
from services.normalize_service import NormalizeService
from utils.exceptions import CrossCheckError, PreconditionError

Matrix = List[List[MultiPoly]]

LAM = "lam"
U = "u"
TAU = "tau"


def _xy_degree(poly: MultiPoly) -> int:
    """Total degree in x and y, other variables treated as parameters."""
    indices = [i for i, v in enumerate(poly.variables) if v in ("x", "y")]
    if poly.is_zero:
        return -1
    return max(sum(exps[i] for i in indices) for exps in poly.terms)


def sylvester_matrix(a: MultiPoly, b: MultiPoly, var: str = "y") -> Matrix:
    """Sylvester matrix of a and b in var, rows of a first, highest powers first."""
    ca = a.coefficients_in(var)[::-1]
    cb = b.coefficients_in(var)[::-1]
    m, n = len(ca) - 1, len(cb) - 1
    size = m + n
    rows = []
    for k in range(n):
        rows.append([MultiPoly()] * k + ca + [MultiPoly()] * (size - m - 1 - k))
    for k in range(m):
        rows.append([MultiPoly()] * k + cb + [MultiPoly()] * (size - n - 1 - k))
    return rows


def bareiss_determinant(matrix: Sequence[Sequence]) -> MultiPoly:
    """Fraction-free Gaussian elimination; row swaps flip the sign."""
    rows = [[MultiPoly.lift(entry) for entry in row] for row in matrix]
    size = len(rows)
    if size == 0:
        return MultiPoly.constant(1)
    sign = 1
    previous = MultiPoly.constant(1)
    for k in range(size - 1):
        if rows[k][k].is_zero:
            pivot = next((i for i in range(k + 1, size) if not rows[i][k].is_zero), None)
            if pivot is None:
                return MultiPoly()
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                rows[i][j] = numerator.exact_divide(previous)
            rows[i][k] = MultiPoly()
        previous = rows[k][k]
    determinant = rows[size - 1][size - 1]
    return determinant if sign > 0 else -determinant


def cofactor_determinant(matrix: Sequence[Sequence]) -> MultiPoly:
    """Laplace expansion along the first row; for small matrices only."""
    rows = [[MultiPoly.lift(entry) for entry in row] for row in matrix]
    if not rows:
        return MultiPoly.constant(1)
    if len(rows) == 1:
        return rows[0][0]
    total = MultiPoly()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


class ResultantService:
    """Service for resultants and the profiles built from them."""

    @staticmethod
    def resultant(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
        if a.is_zero or b.is_zero:
            raise PreconditionError("resultant of a zero polynomial")
        if a.deg_in(var) < 1 and b.deg_in(var) < 1:
            raise PreconditionError(f"both polynomials are constant in {var}")
        matrix = sylvester_matrix(a, b, var)
        logging.debug("Sylvester matrix of size %d in %s", len(matrix), var)
        return bareiss_determinant(matrix)

    @staticmethod
    def resultant_y(a: MultiPoly, b: MultiPoly) -> MultiPoly:
        """Raw Sylvester determinant of a and b with respect to y."""
        return ResultantService.resultant(a, b, "y")

    @staticmethod
    @lru_cache(maxsize=128)
    def resultant_profile(f: MultiPoly) -> ResultantProfile:
        """
        Q(x, lam, u) = Res_y(f - lam, f_y - u) collected by powers of x.

        Raises:
            PreconditionError: f is not in normal form.
            CrossCheckError: Q(0, lam, 0) is not +-n^n lam^(n-1) + lower terms.
        """
        if not NormalizeService.is_normal_form(f):
            raise PreconditionError(f"{f} is not monic in y with deg f = deg_y f")
        n = NormalizeService.degree(f)
        lam, u = MultiPoly.var(LAM), MultiPoly.var(U)
        q = ResultantService.resultant_y(f - lam, f.derivative("y") - u)
        coefficients = tuple(q.coefficients_in("x")[::-1])
        profile = ResultantProfile(n, coefficients)
        at_origin = q.substitute({"x": 0, U: 0})
        top = at_origin.coefficients_in(LAM)
        if len(top) != n or abs(Fraction(top[-1].constant_value())) != Fraction(n) ** n:
            raise CrossCheckError(f"Q(0, lam, 0) = {at_origin} violates the degree identity")
        logging.debug("Resultant profile of %s: N = %d", f, profile.N)
        return profile

    @staticmethod
    def fiber_profile(g: MultiPoly, h: MultiPoly, lambda0=None) -> FiberProfile:
        """
        R(x, tau) = Res_y(g - tau, h) collected by powers of x.

        Args:
            g, h: polynomials in x, y; either may contain lam, which is then
                replaced by lambda0 after the resultant is formed.
            lambda0: Fraction or AlgebraicScalar, or None when lam is absent.

        Leading coefficients that vanish after the substitution are dropped,
        so R_0 is nonzero. A TowerSplit raised by a zero test is left to the caller.
        """
        degree = _xy_degree(h)
        if degree <= 0 or h.deg_in("y") != ExtRational(degree):
            raise PreconditionError(f"{h} does not satisfy 0 < deg h = deg_y h")
        r = _symbolic_fiber_resultant(g, h)
        if lambda0 is not None:
            r = r.substitute({LAM: lambda0})
        elif LAM in r.variables:
            raise PreconditionError("a fiber value is needed to specialize lam")
        coefficients = r.coefficients_in("x")[::-1]
        while coefficients and is_certified_zero(coefficients[0]):
            coefficients.pop(0)
        if not coefficients:
            raise CrossCheckError(f"Res_y(g - tau, h) vanishes for g = {g}, h = {h}")
        return FiberProfile(tuple(coefficients))

    @staticmethod
    def lemma_lp_exponent(profile: FiberProfile) -> LemmaLP:
        """
        Exponent of g on {h = 0} read off the fiber profile.

        Case I (R_0 constant): 1 / max_{i >= 1} deg R_i / i.
        Case II (R_0(0) != 0): 0.
        Case III (R_0(0) = ... = R_r(0) = 0, R_{r+1}(0) != 0):
            -1 / min_{i = 0..r} ord_0 R_i / (r + 1 - i).
        Case IV (every R_i(0) = 0): -inf.
        """
        coefficients = profile.coefficients
        r0 = coefficients[0]
        if tau_degree(r0) == 0:
            top = ext_max(
                tau_degree(r) / i for i, r in enumerate(coefficients) if i and not r.is_zero
            )
            if not top > 0:
                raise CrossCheckError("R(x, tau) does not depend on tau")
            return LemmaLP(top.reciprocal(), "I")
        orders = [tau_order(r) for r in coefficients]
        if orders[0] == 0:
            return LemmaLP(ExtRational(0), "II")
        r = 0
        while r + 1 < len(orders) and orders[r + 1] != 0:
            r += 1
        if r == len(orders) - 1:
            return LemmaLP(NEG_INFINITY, "IV")
        ratio = min(
            Fraction(orders[i], r + 1 - i) for i in range(r + 1) if orders[i] is not POS_INFINITY
        )
        return LemmaLP(ExtRational(-1 / ratio), "III")


@lru_cache(maxsize=256)
def _symbolic_fiber_resultant(g: MultiPoly, h: MultiPoly) -> MultiPoly:
    return ResultantService.resultant_y(g - MultiPoly.var(TAU), h)


def is_certified_zero(poly: MultiPoly) -> bool:
    """Zero test of a polynomial with tower coefficients; may raise TowerSplit."""
    return all(decide_zero(c) for c in poly.terms.values())


def tau_degree(poly: MultiPoly, name: str = TAU) -> ExtRational:
    """Degree in name counting only coefficients certified nonzero."""
    coefficients = poly.coefficients_in(name)
    for k in range(len(coefficients) - 1, -1, -1):
        if not is_certified_zero(coefficients[k]):
            return ExtRational(k)
    return NEG_INFINITY


def tau_order(poly: MultiPoly, name: str = TAU):
    """Order of vanishing at name = 0; POS_INFINITY for zero."""
    for k, coefficient in enumerate(poly.coefficients_in(name)):
        if not is_certified_zero(coefficient):
            return k
    return POS_INFINITY


def specialize(poly: MultiPoly, lambda0, u: Optional[object] = None) -> MultiPoly:
    mapping = {LAM: lambda0}
    if u is not None:
        mapping[U] = u
    return poly.substitute(mapping)
