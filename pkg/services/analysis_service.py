"""
Full analysis of a polynomial in x, y: everything is computed on the normal form and
every fiber value is reported in the coordinates of the input.
"""

import logging
from dataclasses import replace
from typing import List

from config.config import Config
from models.polynomial import MultiPoly
from models.reports import AnalysisReport, LambdaPoint, NormalizationCert
from services.classifier_service import ClassifierService
from services.normalize_service import NormalizeService, shear_candidates
from services.puiseux_service import PuiseuxService
from services.resultant_service import ResultantService
from utils.decorators import log_errors
from utils.exceptions import CrossCheckError


def generic_probe_points(special: List[LambdaPoint], count: int) -> List[LambdaPoint]:
    """The first count rationals 0, 1, -1, 2, ... outside the rational points of special."""
    excluded = {p.value for p in special if p.kind == "rational"}
    probes = []
    for value in shear_candidates():
        if len(probes) >= count:
            break
        if value not in excluded:
            probes.append(LambdaPoint.rational(value))
    return probes


def _transported(item, cert: NormalizationCert):
    return replace(item, lambda_point=NormalizeService.transport_lambda(item.lambda_point, cert))


class AnalysisService:
    """Service for the analyze verb."""

    @staticmethod
    @log_errors
    def analyze(f: MultiPoly, settings=Config) -> AnalysisReport:
        g, cert = NormalizeService.normalize(f)
        profile = ResultantService.resultant_profile(g)
        generic, special = ClassifierService.exponent_function(g)
        lambda_set = ClassifierService.lambda_set(g)
        probes = generic_probe_points(lambda_set, settings.GENERIC_PROBES)

        probe_records = [ClassifierService.exponent_at(g, p, profile) for p in probes]
        for record in probe_records:
            if record.value != generic.value:
                raise CrossCheckError(
                    f"exponent {record.value} at {record.lambda_point} differs from {generic.value}"
                )

        compared = [p for p in lambda_set] + probes[:1]
        comparisons = [c for p in compared for c in ClassifierService.comparisons(g, p)]
        k_inf, fedorjuk = ClassifierService.kinf_and_fedorjuk(g, special)
        affine, bifurcation = ClassifierService.bifurcation_set(g)
        global_gradient = ClassifierService.global_gradient_exponent(g, special)

        oracle = []
        if settings.ORACLE_IN_ANALYZE and NormalizeService.degree(g) >= 2:
            for point in compared:
                oracle.extend(PuiseuxService.cross_check(g, point))
            if not all(report.all_agree for report in oracle):
                raise CrossCheckError(f"oracle cross-check disagrees for {f}")

        def points(group):
            return tuple(NormalizeService.transport_lambda(p, cert) for p in group)

        logging.info("Analyzed %s: generic exponent %s, %d critical values at infinity",
                     f, generic.value, len(lambda_set))
        return AnalysisReport(
            poly=f,
            normalized=g,
            cert=cert,
            profile=profile,
            lambda_set=points(lambda_set),
            generic=generic,
            special=tuple(_transported(r, cert) for r in special),
            comparisons=tuple(_transported(c, cert) for c in comparisons),
            k_inf=points(k_inf),
            fedorjuk=points(fedorjuk),
            affine_critical=points(affine),
            bifurcation=points(bifurcation),
            global_gradient=global_gradient,
            generic_probes=tuple(_transported(r, cert) for r in probe_records),
            oracle=tuple(_transported(o, cert) for o in oracle),
        )
