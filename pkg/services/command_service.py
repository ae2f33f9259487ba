"""
Command dispatch: one parsed command line in, an exit code and a rendered report out.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from config.config import Config
from models.polynomial import MultiPoly
from models.reports import LambdaPoint
from services.algebra_service import squarefree_part
from services.analysis_service import AnalysisService
from services.classifier_service import ClassifierService, on_branches
from services.normalize_service import NormalizeService
from services.puiseux_service import PuiseuxService
from services.resultant_service import ResultantService
from services.witness_service import WitnessService
from utils.error_handlers import error_document
from utils.exceptions import GradinfError, UsageError
from utils.parser import parse_curve, parse_lambda, parse_poly
from utils.report import render_json, render_text

VERBS = ("analyze", "exponent", "fiber", "compare", "oracle", "witness", "resultant")


@dataclass(frozen=True)
class Command:
    verb: str
    poly: str
    lambda_spec: Optional[str] = None
    curve: Optional[str] = None
    variables: Tuple[str, ...] = ("x", "y")
    as_json: bool = False


def lambda_point(spec: Optional[str]) -> LambdaPoint:
    """The fiber value named by a --lambda option."""
    if spec is None:
        raise UsageError("this command needs --lambda")
    kind, value = parse_lambda(spec)
    if kind == "generic":
        return LambdaPoint.generic()
    if kind == "rational":
        return LambdaPoint.rational(value)
    if value.degree < 1:
        raise UsageError("root(p) needs a non-constant p")
    if squarefree_part(value).degree < value.degree:
        raise UsageError(f"root(p) needs a squarefree p, got {value.format('t')}")
    if value.degree == 1:
        return LambdaPoint.rational(-value.coeffs[0] / value.coeffs[1])
    return LambdaPoint.root(value)


class _Normalized:
    """f in normal form, with fiber values moved between the two coordinate systems."""

    def __init__(self, f: MultiPoly):
        self.f = f
        self.g, self.cert = NormalizeService.normalize(f)

    def inward(self, point: LambdaPoint) -> LambdaPoint:
        if point.is_generic:
            return point
        return NormalizeService.untransport_lambda(point, self.cert)

    def outward(self, point: LambdaPoint) -> LambdaPoint:
        return NormalizeService.transport_lambda(point, self.cert)


def _analyze(cmd: Command, settings=Config) -> Tuple[int, dict]:
    report = AnalysisService.analyze(parse_poly(cmd.poly), settings)
    return 0, {"report": report.to_json()}


def _exponent(cmd: Command, _settings=Config) -> Tuple[int, dict]:
    target = _Normalized(parse_poly(cmd.poly))
    point = lambda_point(cmd.lambda_spec)
    records = []
    for record in ClassifierService.exponent_records(target.g, target.inward(point)):
        document = record.to_json()
        if not record.lambda_point.is_generic:
            document["lambda"] = target.outward(record.lambda_point).to_json()
        records.append(document)
    return 0, {"normalization": target.cert.to_json(), "records": records}


def _fiber(cmd: Command, _settings=Config) -> Tuple[int, dict]:
    target = _Normalized(parse_poly(cmd.poly))
    point = lambda_point(cmd.lambda_spec)
    if point.is_generic:
        raise UsageError("fiber needs a rational or root(p) value")

    def record(p: LambdaPoint) -> dict:
        return {
            "lambda": target.outward(p).to_json(),
            "on_fiber": ClassifierService.fiber_exponent_at(target.g, p).to_json(),
        }

    return 0, {"records": on_branches(target.inward(point), record)}


def _compare(cmd: Command, _settings=Config) -> Tuple[int, dict]:
    target = _Normalized(parse_poly(cmd.poly))
    point = lambda_point(cmd.lambda_spec)
    if point.is_generic:
        raise UsageError("compare needs a rational or root(p) value")
    records = []
    for comparison in ClassifierService.comparisons(target.g, target.inward(point)):
        document = comparison.to_json()
        document["lambda"] = target.outward(comparison.lambda_point).to_json()
        records.append(document)
    return 0, {"records": records}


def _oracle(cmd: Command, _settings=Config) -> Tuple[int, dict]:
    target = _Normalized(parse_poly(cmd.poly))
    point = lambda_point(cmd.lambda_spec)
    if point.is_generic:
        raise UsageError("oracle needs a rational or root(p) value")
    reports = PuiseuxService.cross_check(target.g, target.inward(point))
    documents = []
    for report in reports:
        document = report.to_json()
        document["lambda"] = target.outward(report.lambda_point).to_json()
        documents.append(document)
    agree = all(report.all_agree for report in reports)
    return (0 if agree else 3), {"all_agree": agree, "reports": documents}


def _witness(cmd: Command, _settings=Config) -> Tuple[int, dict]:
    f = parse_poly(cmd.poly, cmd.variables)
    curve = parse_curve(cmd.curve) if cmd.curve else None
    if curve is None:
        raise UsageError("witness needs --curve")
    if not cmd.lambda_spec:
        raise UsageError("witness needs --lambda")
    point = lambda_point(cmd.lambda_spec)
    if point.kind != "rational":
        raise UsageError("witness needs a rational --lambda")
    report = WitnessService.witness(f, curve, point.value, cmd.variables)
    document = {"lambda": point.to_json(), "witness": report.to_json()}
    if report.valid and set(f.variables) <= {"x", "y"}:
        document["prop621"] = WitnessService.prop621_check(
            f, curve, point.value, cmd.variables
        ).to_json()
    return 0, document


def _resultant(cmd: Command, _settings=Config) -> Tuple[int, dict]:
    target = _Normalized(parse_poly(cmd.poly))
    profile = ResultantService.resultant_profile(target.g)
    document = profile.to_json()
    document["Q"] = str(profile.polynomial())
    return 0, {"normalized": str(target.g), "profile": document}


_HANDLERS: Dict[str, Callable[..., Tuple[int, dict]]] = {
    "analyze": _analyze,
    "exponent": _exponent,
    "fiber": _fiber,
    "compare": _compare,
    "oracle": _oracle,
    "witness": _witness,
    "resultant": _resultant,
}


class CommandService:
    """Service running one command and rendering its document."""

    @staticmethod
    def run_command(cmd: Command, settings=Config) -> Tuple[int, str]:
        """
        Returns:
            (exit code, rendered output): 0 success, 1 parse or usage error,
            2 precondition violation, 3 failed cross-check.
        """
        if cmd.verb not in _HANDLERS:
            error = UsageError(f"unknown command {cmd.verb}")
            code, document = error.exit_code, error_document(error)
        else:
            try:
                code, document = _HANDLERS[cmd.verb](cmd, settings)
            except GradinfError as error:
                logging.error("Error in %s: %s", cmd.verb, error)
                code, document = error.exit_code, error_document(error)
        document = dict(document, command={
            "verb": cmd.verb,
            "poly": cmd.poly,
            "lambda": cmd.lambda_spec,
            "curve": cmd.curve,
            "vars": list(cmd.variables),
        })
        if cmd.as_json:
            return code, render_json(document, settings)
        return code, render_text(document)

