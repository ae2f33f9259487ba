"""
Classifier service: critical values at infinity, the exponent function
lam -> L_lam(f) and the exponents on single fibers, for f in normal form.
"""

import logging
from fractions import Fraction
from typing import Callable, List, Tuple, TypeVar

from models.algebraic import resolve_splits
from models.polynomial import MultiPoly
from models.reports import (
    ExponentRecord,
    FiberComparison,
    GlobalExponent,
    LambdaPoint,
    ResultantProfile,
)
from models.scalars import NEG_INFINITY, POS_INFINITY, ExtRational, ext_max
from services.algebra_service import AlgebraService
from services.critical_service import CriticalService, merge_points, points_from_polynomial
from services.normalize_service import NormalizeService
from services.resultant_service import (
    LAM,
    U,
    ResultantService,
    is_certified_zero,
    specialize,
    tau_degree,
)
from utils.exceptions import CrossCheckError, PreconditionError, UsageError

T = TypeVar("T")


def on_branches(point: LambdaPoint, compute: Callable[[LambdaPoint], T]) -> List[T]:
    """Run compute at point, once per dynamic evaluation branch of an algebraic point."""
    if point.kind != "root":
        return [compute(point)]
    return [result for _, result in resolve_splits(
        lambda tower: compute(point.with_tower(tower)), point.tower
    )]


def _scalar(point: LambdaPoint):
    if point.is_generic:
        raise UsageError("a generic fiber value has no single exponent here; use generic_exponent")
    return point.scalar()


def _generic_value(profile: ResultantProfile) -> Tuple[ExtRational, str]:
    """Positive formula when deg_u Q_0 = 0, otherwise 0."""
    if profile.q0.deg_in(U) == 0:
        top = ext_max(
            q.deg_in(U) / i for i, q in enumerate(profile.coefficients) if i and not q.is_zero
        )
        if not top.is_finite or top < Fraction(1, max(profile.N, 1)):
            raise CrossCheckError(f"max deg_u Q_i / i = {top} is below 1/N")
        return top.reciprocal(), "T47"
    return ExtRational(0), "T48"


def _specialized_top(profile: ResultantProfile, lambda0) -> ExtRational:
    return ext_max(
        tau_degree(specialize(q, lambda0), U) / i
        for i, q in enumerate(profile.coefficients)
        if i and not q.is_zero
    )


class ClassifierService:
    """Service for the exponent function of a polynomial in normal form."""

    @staticmethod
    def lambda_set(f: MultiPoly) -> List[LambdaPoint]:
        """Roots of Q_0(lam, 0): rational points first, then the algebraic residual."""
        profile = ResultantService.resultant_profile(f)
        q0 = profile.q0.substitute({U: 0})
        if q0.is_zero:
            raise CrossCheckError("Q_0(lam, 0) vanishes identically")
        points = points_from_polynomial(q0, LAM)
        logging.debug("Critical values at infinity of %s: %s", f, [str(p) for p in points])
        return points

    @staticmethod
    def exponent_at(f: MultiPoly, point: LambdaPoint, profile: ResultantProfile = None):
        """
        The exponent L_lam0(f) at a rational or algebraic point.

        Raises:
            UsageError: point is generic.
            TowerSplit: a zero test met a zero divisor; see exponent_records.
        """
        profile = profile or ResultantService.resultant_profile(f)
        lambda0 = _scalar(point)
        in_lambda = is_certified_zero(specialize(profile.q0, lambda0, 0))
        if not in_lambda:
            value, case = _generic_value(profile)
        else:
            orders = [AlgebraService.ord_at(q, lambda0) for q in profile.coefficients]
            if all(order != 0 for order in orders):
                value, case = NEG_INFINITY, "T41_i"
            else:
                r = next(i for i, order in enumerate(orders) if order == 0) - 1
                ratio = min(
                    Fraction(orders[i], r + 1 - i)
                    for i in range(r + 1)
                    if orders[i] is not POS_INFINITY
                )
                value, case = ExtRational(-1 - 1 / ratio), "T41_ii"
        if not in_lambda == (value < -1) == (value < 0):
            raise CrossCheckError(f"exponent {value} at {point} contradicts membership in Lambda")
        return ExponentRecord(point, value, case, in_lambda)

    @staticmethod
    def exponent_records(f: MultiPoly, point: LambdaPoint) -> List[ExponentRecord]:
        profile = ResultantService.resultant_profile(f)
        if point.is_generic:
            return [ClassifierService.generic_exponent(f, profile)]
        return on_branches(point, lambda p: ClassifierService.exponent_at(f, p, profile))

    @staticmethod
    def generic_exponent(f: MultiPoly, profile: ResultantProfile = None) -> ExponentRecord:
        profile = profile or ResultantService.resultant_profile(f)
        value, case = _generic_value(profile)
        return ExponentRecord(LambdaPoint.generic(), value, case, False)

    @staticmethod
    def special_records(f: MultiPoly) -> List[ExponentRecord]:
        records = []
        for point in ClassifierService.lambda_set(f):
            records.extend(ClassifierService.exponent_records(f, point))
        return records

    @staticmethod
    def exponent_function(f: MultiPoly) -> Tuple[ExponentRecord, List[ExponentRecord]]:
        """The generic value and one record per point of Lambda(f)."""
        generic = ClassifierService.generic_exponent(f)
        special = ClassifierService.special_records(f)
        if generic.value < 0 or any(not record.value < -1 for record in special):
            raise CrossCheckError("exponent function does not take the expected shape")
        return generic, special

    @staticmethod
    def fiber_exponent_at(f: MultiPoly, point: LambdaPoint) -> ExtRational:
        """Exponent of grad f on the fiber itself, from the profile of (f_y, f - lam0)."""
        lambda0 = _scalar(point)
        profile = ResultantService.fiber_profile(
            f.derivative("y"), f - MultiPoly.var(LAM), lambda0
        )
        return ResultantService.lemma_lp_exponent(profile).value

    @staticmethod
    def compare_at(f: MultiPoly, point: LambdaPoint) -> FiberComparison:
        """Exponent near the fiber against the exponent on the fiber."""
        profile = ResultantService.resultant_profile(f)
        near = ClassifierService.exponent_at(f, point, profile).value
        on_fiber = ClassifierService.fiber_exponent_at(f, point)
        if near.is_finite and near < -1:
            relation, reason = "strictly_less", "near value lies in (-inf, -1)"
        elif near > 0 and _generic_value(profile)[0].reciprocal() > _specialized_top(
            profile, point.scalar()
        ):
            relation, reason = "strictly_less", "deg_u Q_i drops at lam0"
        else:
            relation, reason = "equal", "no degree drop and value not in (-inf, -1)"
        if near < on_fiber:
            direct = "strictly_less"
        elif near == on_fiber:
            direct = "equal"
        else:
            raise CrossCheckError(f"near value {near} exceeds on-fiber value {on_fiber}")
        if direct != relation:
            raise CrossCheckError(
                f"comparison at {point}: computed {relation}, values give {direct}"
            )
        return FiberComparison(point, near, on_fiber, relation, reason)

    @staticmethod
    def comparisons(f: MultiPoly, point: LambdaPoint) -> List[FiberComparison]:
        return on_branches(point, lambda p: ClassifierService.compare_at(f, p))

    @staticmethod
    def critical_exponent(f: MultiPoly, point: LambdaPoint) -> ExtRational:
        """Exponent of f - lam0 on the critical curve {f_y = 0}."""
        n = NormalizeService.degree(f)
        profile = ResultantService.fiber_profile(
            f - MultiPoly.var(LAM), f.derivative("y").scale(Fraction(1, n)), _scalar(point)
        )
        return ResultantService.lemma_lp_exponent(profile).value

    @staticmethod
    def pair_exponent_if_negative(f: MultiPoly, point: LambdaPoint) -> ExtRational:
        """
        The exponent of the pair (f - lam0, f_y), defined when lam0 is in Lambda(f).

        Raises:
            PreconditionError: lam0 is not a critical value at infinity.
        """
        profile = ResultantService.resultant_profile(f)
        if not is_certified_zero(specialize(profile.q0, _scalar(point), 0)):
            raise PreconditionError(f"{point} is not a critical value at infinity of {f}")
        critical = ClassifierService.critical_exponent(f, point)
        on_fiber = ClassifierService.fiber_exponent_at(f, point)
        if critical.is_finite and not critical < on_fiber:
            raise CrossCheckError(
                f"exponent on the critical curve {critical} is not below {on_fiber}"
            )
        return min(critical, on_fiber)

    @staticmethod
    def kinf_and_fedorjuk(
        f: MultiPoly, special: List[ExponentRecord] = None
    ) -> Tuple[List[LambdaPoint], List[LambdaPoint]]:
        special = ClassifierService.special_records(f) if special is None else special
        k_inf = [record.lambda_point for record in special if record.value < -1]
        fedorjuk = [record.lambda_point for record in special if record.value < 0]
        if len(k_inf) != len(special) or len(fedorjuk) != len(special):
            raise CrossCheckError("K_inf or the Fedorjuk set differs from Lambda(f)")
        return k_inf, fedorjuk

    @staticmethod
    def global_gradient_exponent(
        f: MultiPoly, special: List[ExponentRecord] = None
    ) -> GlobalExponent:
        """The minimum over Lambda(f) when it is below -1, otherwise only the bound -1."""
        special = ClassifierService.special_records(f) if special is None else special
        if not special:
            return GlobalExponent(None)
        lowest = min(record.value for record in special)
        if lowest < -1:
            return GlobalExponent(lowest)
        return GlobalExponent(None)

    @staticmethod
    def bifurcation_set(f: MultiPoly) -> Tuple[List[LambdaPoint], List[LambdaPoint]]:
        """(C(f), C(f) united with Lambda(f))."""
        affine = CriticalService.affine_critical_values(f)
        return affine, merge_points(affine, ClassifierService.lambda_set(f))
