"""
Newton-Puiseux oracle at infinity.

The roots of f(s^D, y) - lam0 and of f_y(s^D, y) / n are computed as Laurent
series in s with decreasing exponents, following Newton polygons until every
branch is a simple root and then a fixed number of further terms. Coefficients
live in a tower grown by adjoining roots of characteristic polynomials, and D
is multiplied whenever an edge has a fractional slope.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from config.config import Config, safety_terms
from models.algebraic import AlgebraicScalar, Tower, TowerSplit, decide_zero, inverse
from models.laurent import LaurentPoly
from models.polynomial import MultiPoly
from models.reports import (
    ContactMatrix,
    LambdaPoint,
    OracleReport,
    PuiseuxBranch,
    PuiseuxBranchSet,
)
from models.scalars import NEG_INFINITY, ExtRational, ext_max
from models.univariate import UniPoly
from services.algebra_service import AlgebraService, rational_roots, squarefree_decomposition
from services.classifier_service import ClassifierService, on_branches
from services.normalize_service import NormalizeService
from services.resultant_service import ResultantService, is_certified_zero, specialize
from utils.decorators import deepen_on_truncation
from utils.exceptions import CrossCheckError, PreconditionError, TruncationError

PARAMETER = "s"

Coefficients = List[LaurentPoly]


class _Ramify(Exception):
    """A Newton polygon edge needs s -> s^factor."""

    def __init__(self, factor: int):
        super().__init__(f"ramification {factor}")
        self.factor = factor


def newton_edges(
    degrees: Sequence[ExtRational], bound=None, count: Optional[int] = None
) -> Tuple[int, List[Tuple[int, int, Fraction]]]:
    """
    Upper Newton polygon at infinity of sum a_k y^k, given deg a_k.

    Returns:
        (k0, edges) with k0 the number of zero roots and edges (i, j, e):
        j - i roots of leading exponent e, in increasing order of e. Edges with
        e >= bound are not walked, nor edges past index count.
    """
    finite = [k for k, d in enumerate(degrees) if d.is_finite]
    if not finite:
        raise PreconditionError("the Newton polygon of the zero polynomial")
    k0 = finite[0]
    edges = []
    i = k0
    while i < finite[-1] and (count is None or i < count):
        best = None
        for j in finite:
            if j <= i:
                continue
            e = (degrees[i].value - degrees[j].value) / (j - i)
            if best is None or e <= best[1]:
                best = (j, e)
        j, e = best
        if bound is not None and e >= bound:
            break
        edges.append((i, j, e))
        i = j
    return k0, edges


def _shift(coeffs: Coefficients, value: LaurentPoly) -> Coefficients:
    """Coefficients of P(y + value)."""
    coeffs = list(coeffs)
    size = len(coeffs)
    for i in range(size - 1):
        for j in range(size - 2, i - 1, -1):
            coeffs[j] = coeffs[j] + coeffs[j + 1] * value
    return coeffs


def _rationalize(poly: UniPoly) -> UniPoly:
    values = []
    for c in poly.coeffs:
        rational = c.rational_value() if isinstance(c, AlgebraicScalar) else c
        values.append(c if rational is None else rational)
    return UniPoly(values)


def _scalar_key(value):
    if isinstance(value, AlgebraicScalar):
        return ("algebraic", value.tower.moduli, value.rep)
    return ("rational", value)


def contact_degree(a: PuiseuxBranch, b: PuiseuxBranch) -> ExtRational:
    """deg(a - b), certified on the exact part of both truncations."""
    if a.ident == b.ident:
        return NEG_INFINITY
    floors = [branch.floor for branch in (a, b) if not branch.exact]
    bound = max(floors) if floors else None
    difference = a.series - b.series
    for k in sorted(difference.terms, reverse=True):
        if bound is not None and k < bound:
            break
        if not decide_zero(difference.terms[k]):
            return ExtRational(k)
    if bound is None:
        return NEG_INFINITY
    raise TruncationError(f"branches agree down to s^{bound}")


def composition_degree(g: MultiPoly, branch: PuiseuxBranch, D: int, vanishes=False):
    """deg g(s^D, branch), certified against the truncation of the branch."""
    if vanishes:
        return NEG_INFINITY
    x = LaurentPoly.monomial(1, D, PARAMETER)
    value = AlgebraService.eval_on_curve(g, [x, branch.series], ["x", "y"])
    if branch.exact:
        return value.certified_degree()
    precision = branch.floor - 1
    reach = ext_max([branch.series.degree(), precision]).value
    index = {name: i for i, name in enumerate(g.variables)}
    bound = None
    for exps, _ in g.terms.items():
        b = exps[index["y"]] if "y" in index else 0
        a = exps[index["x"]] if "x" in index else 0
        if b:
            error = D * a + (b - 1) * reach + precision
            bound = error if bound is None else max(bound, error)
    if bound is None:
        return value.certified_degree()
    for k in sorted(value.terms, reverse=True):
        if k <= bound:
            break
        if not decide_zero(value.terms[k]):
            return ExtRational(k)
    raise TruncationError(f"composition with {g} is not certified above s^{bound}")


def _reconstructs(roots: Sequence[PuiseuxBranch], target: Coefficients) -> bool:
    """Whether prod (y - root) agrees with target on every certified order."""
    product = [LaurentPoly.constant(1, PARAMETER)]
    for root in roots:
        shifted = [LaurentPoly(parameter=PARAMETER)] + product
        product = [
            shifted[k] - (root.series * product[k] if k < len(product) else 0)
            for k in range(len(shifted))
        ]
    if len(product) != len(target):
        return False
    reach = []
    slack = None
    for root in roots:
        if root.exact:
            reach.append(root.series.degree())
            continue
        top = ext_max([root.series.degree(), root.floor - 1])
        reach.append(top)
        gap = top.value - (root.floor - 1)
        slack = gap if slack is None else min(slack, gap)
    reach.sort(reverse=True)
    n = len(roots)
    for k in range(1, n + 1):
        bound = None
        if slack is not None:
            bound = sum(reach[:k], ExtRational(0)) - slack
        difference = product[n - k] - target[n - k]
        for exponent, coefficient in difference.terms.items():
            if bound is not None and not ExtRational(exponent) > bound:
                continue
            if not decide_zero(coefficient):
                return False
    return True


def contact_matrix(beta: Sequence[PuiseuxBranch]) -> ContactMatrix:
    entries = tuple(
        tuple(NEG_INFINITY if i == j else contact_degree(a, b) for j, b in enumerate(beta))
        for i, a in enumerate(beta)
    )
    return ContactMatrix(entries)


@dataclass(frozen=True)
class _OracleData:
    branches: PuiseuxBranchSet
    fiber_on_beta: Tuple[ExtRational, ...]
    critical_on_gamma: Tuple[ExtRational, ...]
    reconstruction: bool


class _Expansion:
    """One attempt at the expansion for a fixed D and a fixed set of modulus choices."""

    def __init__(self, f: MultiPoly, lambda0, base: Tower, D: int, memo: Dict, terms: int):
        self.f = f
        self.lambda0 = lambda0
        self.D = D
        self.memo = memo
        self.terms = terms
        self.tower = base
        self.requests: Dict[int, tuple] = {}
        self.counter = 0
        self.group = 0

    def laurent_coefficients(self, poly: MultiPoly) -> Coefficients:
        out = []
        for c in poly.coefficients_in("y"):
            powers = c.coefficients_in("x")
            out.append(LaurentPoly(
                {k * self.D: p.constant_value() for k, p in enumerate(powers)}, PARAMETER
            ))
        return out

    def adjoin(self, h: UniPoly):
        """A root of the monic squarefree h, adjoined as a new tower level."""
        level = self.tower.depth + 1
        key = (level, tuple(_scalar_key(c) for c in h.coeffs))
        self.tower = self.tower.extend(self.memo.get(key, h.coeffs))
        self.requests[level] = key
        logging.debug("Adjoined level %d: %s", level, self.tower.modulus_text(level))
        return self.tower.generator(level)

    def roots(self, phi: UniPoly) -> List[Tuple[object, int]]:
        """All roots of phi with multiplicity; phi(0) != 0."""
        found = []
        for factor, multiplicity in squarefree_decomposition(_rationalize(phi)):
            h = _rationalize(factor)
            if h.is_rational():
                rational, h = rational_roots(h)
                found.extend((root, multiplicity) for root in rational)
            while h.degree >= 1:
                if h.degree == 1:
                    found.append((-h.coeffs[0] * inverse(h.coeffs[1]), multiplicity))
                    break
                alpha = self.adjoin(h.monic())
                found.append((alpha, multiplicity))
                h = h.exact_div(UniPoly([-alpha, 1]))
        return found

    def branch(self, terms, exact: bool) -> PuiseuxBranch:
        self.counter += 1
        series = LaurentPoly(dict(terms), PARAMETER)
        floor = terms[-1][0] if terms else 0
        return PuiseuxBranch(series, exact, floor, (self.group, self.counter))

    def regular(self, coeffs: Coefficients, bound: int, terms) -> PuiseuxBranch:
        """Continue a simple root by its unique Newton polygon edge."""
        for _ in range(self.terms):
            d0 = coeffs[0].certified_degree()
            if not d0.is_finite:
                return self.branch(terms, True)
            d1 = coeffs[1].certified_degree()
            if not d1.is_finite or not d0.value - d1.value < bound:
                raise CrossCheckError("a simple root left its Newton polygon edge")
            e = int(d0.value - d1.value)
            c = -coeffs[0].coefficient(int(d0.value)) * inverse(coeffs[1].coefficient(int(d1.value)))
            coeffs = _shift(coeffs, LaurentPoly.monomial(c, e, PARAMETER))
            terms = terms + ((e, c),)
            bound = e
        return self.branch(terms, not coeffs[0].certified_degree().is_finite)

    def expand(self, poly: MultiPoly) -> List[PuiseuxBranch]:
        """Roots of a squarefree polynomial monic in y."""
        coeffs = self.laurent_coefficients(poly)
        pending = [(coeffs, None, len(coeffs) - 1, ())]
        branches = []
        while pending:
            coeffs, bound, multiplicity, terms = pending.pop()
            degrees = [c.certified_degree() for c in coeffs]
            k0, edges = newton_edges(degrees, bound, multiplicity)
            if k0 + sum(j - i for i, j, _ in edges) != multiplicity:
                raise CrossCheckError("Newton polygon does not account for every root")
            branches.extend(self.branch(terms, True) for _ in range(k0))
            for i, j, e in edges:
                if e.denominator != 1:
                    raise _Ramify(e.denominator)
                e = int(e)
                top = int(degrees[i].value) + i * e
                phi = UniPoly([coeffs[k].coefficient(top - k * e) for k in range(i, j + 1)])
                for c, mu in self.roots(phi):
                    child = _shift(coeffs, LaurentPoly.monomial(c, e, PARAMETER))
                    child_terms = terms + ((e, c),)
                    if mu == 1:
                        branches.append(self.regular(child, e, child_terms))
                    else:
                        pending.append((child, e, mu, child_terms))
        return branches

    def run(self) -> _OracleData:
        f, n = self.f, NormalizeService.degree(self.f)
        fiber = f - MultiPoly.constant(self.lambda0)
        critical = f.derivative("y").scale(Fraction(1, n))
        beta: List[PuiseuxBranch] = []
        gamma: List[PuiseuxBranch] = []
        shared = MultiPoly.constant(1)
        for factor, k in AlgebraService.squarefree_factors_y(fiber):
            self.group += 1
            for root in self.expand(factor):
                beta.extend([root] * k)
                gamma.extend([root] * (k - 1))
            shared = shared * factor ** (k - 1)
        cofactor = AlgebraService.divide_y(critical, shared)
        if cofactor.deg_in("y") >= 1:
            for factor, k in AlgebraService.squarefree_factors_y(cofactor):
                self.group += 1
                for root in self.expand(factor):
                    gamma.extend([root] * k)
        if len(beta) != n or len(gamma) != n - 1:
            raise CrossCheckError(f"found {len(beta)} and {len(gamma)} roots for degree {n}")
        beta.sort(key=PuiseuxBranch.sort_key)
        gamma.sort(key=PuiseuxBranch.sort_key)
        for root in beta + gamma:
            if root.leading_degree() > self.D:
                raise CrossCheckError(f"branch {root.series} has degree above D = {self.D}")

        on_fiber = {root.ident for root in beta}
        on_critical = {root.ident for root in gamma}
        contact = contact_matrix(beta)
        cross = tuple(tuple(contact_degree(b, g) for g in gamma) for b in beta)
        fy = f.derivative("y")
        fiber_on_beta = tuple(
            composition_degree(fy, b, self.D, b.ident in on_critical) for b in beta
        )
        critical_on_gamma = tuple(
            composition_degree(fiber, g, self.D, g.ident in on_fiber) for g in gamma
        )
        reconstruction = _reconstructs(
            beta, self.laurent_coefficients(fiber)
        ) and _reconstructs(gamma, self.laurent_coefficients(critical))
        branches = PuiseuxBranchSet(self.D, tuple(beta), tuple(gamma), contact, cross, self.tower)
        return _OracleData(branches, fiber_on_beta, critical_on_gamma, reconstruction)


@lru_cache(maxsize=32)
@deepen_on_truncation
def _oracle_data(f: MultiPoly, point: LambdaPoint, depth_factor: int = 1) -> _OracleData:
    n = NormalizeService.degree(f)
    if n < 2:
        raise PreconditionError("the oracle needs deg_y f >= 2")
    if not NormalizeService.is_normal_form(f):
        raise PreconditionError(f"{f} is not in normal form")
    base = point.tower if point.kind == "root" else Tower()
    lambda0 = point.scalar()
    memo: Dict = {}
    D = 1
    restarts = 0
    terms = safety_terms(n, Config) * depth_factor
    while True:
        expansion = _Expansion(f, lambda0, base, D, memo, terms)
        try:
            data = expansion.run()
            logging.debug("Puiseux oracle for %s at %s: D = %d, tower depth %d",
                          f, point, D, expansion.tower.depth)
            return data
        except _Ramify as ramify:
            D *= ramify.factor
            logging.debug("Restarting the expansion with D = %d", D)
        except TowerSplit as split:
            if split.level <= base.depth:
                raise
            memo[expansion.requests[split.level]] = split.factors[0]
            restarts += 1
            if restarts > Config.MAX_SPLIT_RESTARTS:
                raise CrossCheckError("too many dynamic evaluation restarts") from split


def _in_lambda(f: MultiPoly, point: LambdaPoint) -> bool:
    profile = ResultantService.resultant_profile(f)
    return is_certified_zero(specialize(profile.q0, point.scalar(), 0))


def _sum_plus_min(contact: ContactMatrix) -> ExtRational:
    """min_i (sum_{j != i} c_ij + min_{j != i} c_ij)."""
    values = []
    for i in range(contact.size):
        others = [contact[i, j] for j in range(contact.size) if j != i]
        values.append(sum(others, ExtRational(0)) + min(others))
    return min(values)


class PuiseuxService:
    """Service for the Newton-Puiseux recomputation of the exponents."""

    @staticmethod
    def newton_polygon_max_root_degree(coefficients: Sequence[LaurentPoly]) -> ExtRational:
        """
        Largest leading degree of a root of c_0 x^N + ... + c_N.

        Args:
            coefficients: c_0, ..., c_N, highest power of x first.
        """
        c0 = coefficients[0]
        if c0.is_zero:
            raise PreconditionError("the leading coefficient c_0 must be nonzero")
        d0 = c0.degree()
        return ext_max(
            (c.degree() - d0.value) / i for i, c in enumerate(coefficients) if i and not c.is_zero
        )

    @staticmethod
    def root_degrees(coefficients: Sequence[LaurentPoly]) -> List[ExtRational]:
        """Leading degrees of all roots (NEG_INFINITY for zero roots), largest first."""
        if coefficients[0].is_zero:
            raise PreconditionError("the leading coefficient c_0 must be nonzero")
        degrees = [c.degree() for c in reversed(coefficients)]
        k0, edges = newton_edges(degrees)
        found = [NEG_INFINITY] * k0
        for i, j, e in edges:
            found.extend([ExtRational(e)] * (j - i))
        return sorted(found, reverse=True)

    @staticmethod
    def puiseux_branches(f: MultiPoly, point: LambdaPoint) -> PuiseuxBranchSet:
        return _oracle_data(f, point).branches

    @staticmethod
    def contact_matrix(branches: PuiseuxBranchSet) -> ContactMatrix:
        return contact_matrix(branches.beta)

    @staticmethod
    def cor36_exponent(f: MultiPoly, point: LambdaPoint) -> ExtRational:
        """(1 / D) min_i (sum_{j != i} c_ij + min_{j != i} c_ij) - 1 at a point of Lambda(f)."""
        if not _in_lambda(f, point):
            raise PreconditionError(f"{point} is not a critical value at infinity of {f}")
        branches = _oracle_data(f, point).branches
        return _sum_plus_min(branches.contact) / branches.D - 1

    @staticmethod
    def prop22_check(f: MultiPoly, point: LambdaPoint) -> Tuple[ExtRational, ExtRational, bool]:
        data = _oracle_data(f, point)
        lhs = _sum_plus_min(data.branches.contact)
        rhs = min(data.critical_on_gamma)
        return lhs, rhs, lhs == rhs

    @staticmethod
    def lemma31_exponents(f: MultiPoly, point: LambdaPoint) -> Tuple[ExtRational, ExtRational]:
        """(exponent of f_y on the fiber, exponent of f - lam0 on {f_y = 0})."""
        data = _oracle_data(f, point)
        D = data.branches.D
        return min(data.fiber_on_beta) / D, min(data.critical_on_gamma) / D

    @staticmethod
    def lemmad2_check(f: MultiPoly, point: LambdaPoint) -> bool:
        """Every deg(beta_i - beta_j) is some deg(beta_i - gamma_k), and conversely."""
        branches = _oracle_data(f, point).branches
        beta, gamma = branches.beta, branches.gamma
        for i, b in enumerate(beta):
            among_beta = {
                branches.contact[i, j] for j, other in enumerate(beta)
                if j != i and other.ident != b.ident
            }
            among_gamma = {
                branches.cross[i][k] for k, g in enumerate(gamma) if g.ident != b.ident
            }
            if among_beta != among_gamma:
                return False
        return True

    @staticmethod
    def reconstruction_check(f: MultiPoly, point: LambdaPoint) -> bool:
        return _oracle_data(f, point).reconstruction

    @staticmethod
    def oracle_report(f: MultiPoly, point: LambdaPoint) -> OracleReport:
        """Every oracle identity at one point, with agreement against the classifier."""
        lhs, rhs, equal = PuiseuxService.prop22_check(f, point)
        lemma31 = PuiseuxService.lemma31_exponents(f, point)
        expected = (
            ClassifierService.fiber_exponent_at(f, point),
            ClassifierService.critical_exponent(f, point),
        )
        cor36 = agrees = None
        if _in_lambda(f, point):
            cor36 = PuiseuxService.cor36_exponent(f, point)
            agrees = cor36 == ClassifierService.exponent_at(f, point).value
        report = OracleReport(
            lambda_point=point,
            branches=PuiseuxService.puiseux_branches(f, point),
            prop22=(lhs, rhs, equal),
            lemma31=lemma31,
            lemma31_agrees=lemma31 == expected,
            lemmad2=PuiseuxService.lemmad2_check(f, point),
            reconstruction=PuiseuxService.reconstruction_check(f, point),
            cor36=cor36,
            cor36_agrees=agrees,
        )
        if not report.all_agree:
            logging.warning("Oracle disagreement for %s at %s", f, point)
        return report

    @staticmethod
    def cross_check(f: MultiPoly, point: LambdaPoint) -> List[OracleReport]:
        return on_branches(point, lambda p: PuiseuxService.oracle_report(f, p))
