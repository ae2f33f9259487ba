"""
Affine critical values C(f) of a polynomial in normal form, by elimination.

Critical points lie either on a curve {G = 0}, G = gcd_y(f_x, f_y), where f is
constant on every component, or at the finitely many common zeros of
A = f_x / G and B = f_y / G. Values of the first kind are the roots of
Res_y(G, f - lam); candidates of the second kind are roots of
Res_x(Res_y(B, A), Res_y(B, f - lam)) and are verified one by one.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from models.algebraic import Tower, resolve_splits
from models.polynomial import MultiPoly
from models.reports import LambdaPoint
from models.univariate import UniPoly
from services.algebra_service import AlgebraService, rational_roots, squarefree_part
from services.normalize_service import NormalizeService
from services.resultant_service import LAM, ResultantService
from utils.exceptions import CrossCheckError


def points_from_polynomial(poly: MultiPoly, name: str = LAM) -> List[LambdaPoint]:
    """Roots of a univariate polynomial: rationals first, then one algebraic point."""
    if poly.is_zero:
        raise CrossCheckError("expected a nonzero polynomial")
    if poly.is_constant:
        return []
    squarefree = squarefree_part(UniPoly.from_multipoly(poly, name))
    roots, residual = rational_roots(squarefree)
    points = [LambdaPoint.rational(root) for root in roots]
    if residual.degree > 0:
        points.append(LambdaPoint.root(residual))
    return points


def merge_points(*groups: List[LambdaPoint]) -> List[LambdaPoint]:
    """Union without repeats; rationals in increasing order first."""
    seen = set()
    rationals, roots = [], []
    for group in groups:
        for point in group:
            key = (point.kind, point.value if point.kind == "rational" else point.tower)
            if key in seen:
                continue
            seen.add(key)
            (rationals if point.kind == "rational" else roots).append(point)
    rationals.sort(key=lambda p: p.value)
    roots.sort(key=str)
    return rationals + roots


class CriticalService:
    """Service for the affine critical values of f."""

    @staticmethod
    def affine_critical_values(f: MultiPoly) -> List[LambdaPoint]:
        n = NormalizeService.degree(f)
        if not NormalizeService.is_normal_form(f):
            raise CrossCheckError(f"{f} is not in normal form")
        if n == 1:
            return []
        lam = MultiPoly.var(LAM)
        fx = f.derivative("x")
        fy = f.derivative("y").scale(Fraction(1, n))
        common = AlgebraService.gcd_y(fx, fy)

        curve_values: List[LambdaPoint] = []
        if common.deg_in("y") >= 1:
            values = ResultantService.resultant_y(common, f - lam)
            if "x" in values.variables:
                raise CrossCheckError(f"f is not constant on the critical curve {common} = 0")
            curve_values = points_from_polynomial(values)
            a = AlgebraService.divide_y(fx, common)
            b = AlgebraService.divide_y(fy, common)
        else:
            a, b = fx, fy
        logging.debug("Critical curve values of %s: %s", f, [str(p) for p in curve_values])

        isolated: List[LambdaPoint] = []
        if b.deg_in("y") >= 1 and not a.is_zero:
            r1 = ResultantService.resultant(b, a, "y")
            if r1.is_zero:
                raise CrossCheckError("f_x / G and f_y / G have a common factor")
            if not r1.is_constant:
                r2 = ResultantService.resultant_y(b, f - lam)
                candidates = points_from_polynomial(ResultantService.resultant(r1, r2, "x"))
                for point in candidates:
                    for branch, verified in _verify_isolated(point, r1, a, b, f):
                        if verified:
                            isolated.append(branch)
        logging.debug("Isolated critical values of %s: %s", f, [str(p) for p in isolated])
        return merge_points(curve_values, isolated)


def _verify_isolated(
    point: LambdaPoint, r1: MultiPoly, a: MultiPoly, b: MultiPoly, f: MultiPoly
) -> List[Tuple[LambdaPoint, bool]]:
    """Whether f - lam0, A and B vanish together, per branch of the tower of lam0."""
    base = point.tower if point.kind == "root" else Tower()
    depth = base.depth
    abscissae = squarefree_part(UniPoly.from_multipoly(r1, "x"))
    tower = base.extend(abscissae.coeffs)
    fiber = f - MultiPoly.var(LAM)

    def check(current: Tower) -> bool:
        lam0 = current.generator(1) if depth else point.value
        x0 = current.generator(depth + 1)

        def in_y(poly: MultiPoly) -> UniPoly:
            return UniPoly.from_multipoly(poly.substitute({"x": x0, LAM: lam0}), "y")

        common = UniPoly.gcd(in_y(b), in_y(a))
        return UniPoly.gcd(common, in_y(fiber)).degree >= 1

    verdicts: Dict[Tower, bool] = {}
    for current, verified in resolve_splits(check, tower):
        prefix = current.prefix(depth)
        verdicts[prefix] = verdicts.get(prefix, False) or verified
    if not depth:
        return [(point, verdicts[Tower()])]
    return [(point.with_tower(prefix), verified) for prefix, verified in verdicts.items()]
