"""
Curve witnesses: degrees of f, f - lam0 and grad f along an explicit Laurent curve,
in any number of variables.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from models.laurent import LaurentPoly
from models.polynomial import MultiPoly
from models.reports import LambdaPoint, Prop621Result, WitnessReport
from models.scalars import NEG_INFINITY, ExtRational, ext_max
from services.algebra_service import AlgebraService
from services.classifier_service import ClassifierService
from services.normalize_service import NormalizeService
from utils.exceptions import PreconditionError, UsageError

Curve = Sequence[LaurentPoly]


def _names(f: MultiPoly, curve: Curve, names: Optional[Sequence[str]]) -> List[str]:
    names = list(names) if names else list(f.variables)
    if len(names) != len(curve):
        raise UsageError(f"{len(curve)} curve components for variables {','.join(names)}")
    missing = set(f.variables) - set(names)
    if missing:
        raise UsageError(f"no curve component for {', '.join(sorted(missing))}")
    return names


class WitnessService:
    """Service for evaluating meromorphic curve witnesses."""

    @staticmethod
    def witness(
        f: MultiPoly, curve: Curve, lambda0, names: Optional[Sequence[str]] = None
    ) -> WitnessReport:
        """
        Degrees of Phi, (f - lam0) o Phi and grad f o Phi.

        The curve is a valid witness when deg Phi > 0 and deg (f - lam0) o Phi < 0;
        ratio is None when deg Phi <= 0.
        """
        names = _names(f, curve, names)
        lambda0 = Fraction(lambda0)
        deg_phi = ext_max(component.degree() for component in curve)
        fiber = AlgebraService.eval_on_curve(f - MultiPoly.constant(lambda0), curve, names)
        partials = tuple(
            AlgebraService.eval_on_curve(f.derivative(name), curve, names).degree()
            for name in names
        )
        deg_grad = ext_max(partials)
        deg_fiber = fiber.degree()
        if not deg_phi > 0:
            ratio = None
        elif not deg_grad.is_finite:
            ratio = NEG_INFINITY
        else:
            ratio = deg_grad / deg_phi.value
        valid = deg_phi > 0 and deg_fiber < 0
        logging.debug("Witness for %s at %s: deg Phi %s, ratio %s", f, lambda0, deg_phi, ratio)
        return WitnessReport(deg_phi, deg_fiber, deg_grad, ratio, valid, partials)

    @staticmethod
    def prop621_check(
        f: MultiPoly,
        curve: Curve,
        lambda0,
        names: Optional[Sequence[str]] = None,
        lambda_in_kinf: Optional[bool] = None,
    ) -> Prop621Result:
        """
        Conclude L_lam0(f) = -1 from a witness with deg grad f o Phi = -deg Phi.

        For polynomials in x, y membership of lam0 in K_inf(f) is computed; in
        more variables the caller must state it.

        Raises:
            PreconditionError: the curve is not a valid witness.
            UsageError: membership in K_inf is needed and was not given.
        """
        report = WitnessService.witness(f, curve, lambda0, names)
        if not report.valid:
            raise PreconditionError("the curve is not a valid witness at this fiber value")
        if set(f.variables) <= {"x", "y"}:
            computed = WitnessService.in_kinf(f, lambda0)
            if lambda_in_kinf is not None and lambda_in_kinf != computed:
                logging.warning("Ignoring K_inf membership %s for %s at %s", lambda_in_kinf, f, lambda0)
            lambda_in_kinf = computed
        elif lambda_in_kinf is None:
            raise UsageError("state whether lam0 lies in K_inf(f) for more than two variables")
        if report.deg_grad != ExtRational(-report.deg_phi.value):
            return Prop621Result(None, "deg grad f o Phi differs from -deg Phi")
        if lambda_in_kinf:
            return Prop621Result(None, "lam0 lies in K_inf(f)")
        return Prop621Result(ExtRational(-1), "deg grad f o Phi = -deg Phi and lam0 not in K_inf(f)")

    @staticmethod
    def in_kinf(f: MultiPoly, lambda0) -> bool:
        """K_inf(f) membership of a rational value for f in x, y, through the normal form."""
        g, cert = NormalizeService.normalize(f)
        point = NormalizeService.untransport_lambda(LambdaPoint.rational(lambda0), cert)
        return ClassifierService.exponent_at(g, point).value < -1

    @staticmethod
    def reparametrize(curve: Curve, k: int) -> List[LaurentPoly]:
        """Substitute t -> t^k."""
        if k < 1:
            raise UsageError("reparametrization exponent must be positive")
        return [component.rescale(k) for component in curve]

    @staticmethod
    def rabier_polynomial() -> MultiPoly:
        """(x*y - 1)*y*z, whose fibers f = lam != 0 contain no critical point at infinity."""
        x, y, z = MultiPoly.var("x"), MultiPoly.var("y"), MultiPoly.var("z")
        return (x * y - MultiPoly.constant(1)) * y * z

    @staticmethod
    def rabier_curve(lambda0) -> List[LaurentPoly]:
        """(t, 1/(2t), -4*lam0*t), lying in the fiber over lam0."""
        lambda0 = Fraction(lambda0)
        return [
            LaurentPoly.monomial(1, 1),
            LaurentPoly.monomial(Fraction(1, 2), -1),
            LaurentPoly.monomial(-4 * lambda0, 1),
        ]
