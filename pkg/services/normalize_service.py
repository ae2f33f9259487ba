"""
Normal form service: monic in y with deg f = deg_y f.
"""

import logging
from fractions import Fraction
from typing import Iterator, Tuple

from models.polynomial import MultiPoly
from models.reports import LambdaPoint, NormalizationCert
from models.algebraic import Tower
from utils.exceptions import PreconditionError


def shear_candidates() -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    k = 1
    while True:
        yield Fraction(k)
        yield Fraction(-k)
        k += 1


class NormalizeService:
    """Service for putting polynomials into normal form."""

    @staticmethod
    def degree(f: MultiPoly) -> int:
        if set(f.variables) - {"x", "y"}:
            raise PreconditionError(f"{f} is not a polynomial in x, y")
        n = f.total_degree()
        if not n.is_finite or n.value < 1:
            raise PreconditionError("the polynomial must be non-constant")
        return int(n.value)

    @staticmethod
    def is_normal_form(f: MultiPoly) -> bool:
        n = NormalizeService.degree(f)
        top = f.coefficients_in("y")
        if len(top) != n + 1:
            return False
        return top[n] == 1

    @staticmethod
    def normalize(f: MultiPoly) -> Tuple[MultiPoly, NormalizationCert]:
        """
        Shear and scale f into normal form.

        Returns:
            (g, cert) with g(x, y) = f(x + a*y, y) / c where a is the first
            candidate with F_n(a, 1) != 0 and c = F_n(a, 1).
        """
        n = NormalizeService.degree(f)
        form = f.degree_form()
        for shear in shear_candidates():
            scale = form.substitute({"x": MultiPoly.constant(shear), "y": MultiPoly.constant(1)})
            scale = Fraction(scale.constant_value())
            if scale != 0:
                break
        sheared = f
        if shear != 0:
            sheared = f.substitute({"x": MultiPoly.var("x") + MultiPoly.var("y").scale(shear)})
        g = sheared.scale(1 / scale)
        cert = NormalizationCert(shear, scale)
        logging.debug("Normalized %s to %s with shear %s and scale %s", f, g, shear, scale)
        if not NormalizeService.is_normal_form(g) or NormalizeService.degree(g) != n:
            raise AssertionError(f"normalization of {f} failed")
        return g, cert

    @staticmethod
    def transport_lambda(point: LambdaPoint, cert: NormalizationCert) -> LambdaPoint:
        """A fiber value of the normal form g mapped to the fiber value of f."""
        c = cert.scale
        if point.kind == "rational":
            return LambdaPoint.rational(c * point.value)
        if point.kind == "root" and c != 1:
            # c*t is a root of c^d m(t/c)
            modulus = point.tower.moduli[0]
            d = len(modulus) - 1
            scaled = tuple(coeff * c ** (d - k) for k, coeff in enumerate(modulus))
            return LambdaPoint("root", tower=Tower().extend(scaled))
        return point

    @staticmethod
    def untransport_lambda(point: LambdaPoint, cert: NormalizationCert) -> LambdaPoint:
        """A fiber value of f mapped to the fiber value of the normal form."""
        inverse = NormalizationCert(cert.shear, 1 / cert.scale)
        return NormalizeService.transport_lambda(point, inverse)
