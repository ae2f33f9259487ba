"""
Result types shared by the services and serialized by the command line.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from models.algebraic import Tower
from models.laurent import LaurentPoly
from models.polynomial import MultiPoly
from models.scalars import ExtRational, format_fraction
from models.univariate import UniPoly


@dataclass(frozen=True)
class LambdaPoint:
    """A fiber value: a rational, a root of a squarefree polynomial, or generic."""

    kind: str
    value: Optional[Fraction] = None
    tower: Optional[Tower] = None

    @classmethod
    def rational(cls, value) -> "LambdaPoint":
        return cls("rational", Fraction(value))

    @classmethod
    def root(cls, modulus: UniPoly) -> "LambdaPoint":
        monic = modulus.monic()
        return cls("root", tower=Tower().extend(monic.coeffs))

    @classmethod
    def generic(cls) -> "LambdaPoint":
        return cls("generic")

    @property
    def is_generic(self) -> bool:
        return self.kind == "generic"

    @property
    def modulus(self) -> Optional[UniPoly]:
        if self.tower is None:
            return None
        return UniPoly(self.tower.moduli[0])

    def with_tower(self, tower: Tower) -> "LambdaPoint":
        """The same root over a refined tower; degree one moduli become rationals."""
        if len(tower.moduli[0]) == 2:
            return LambdaPoint.rational(-tower.moduli[0][0])
        return LambdaPoint("root", tower=tower)

    def scalar(self):
        if self.kind == "rational":
            return self.value
        if self.kind == "root":
            return self.tower.generator(1)
        raise ValueError("a generic fiber value has no scalar")

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"type": "rational", "value": format_fraction(self.value)}
        if self.kind == "root":
            return {"type": "root", "modulus": self.modulus.format("t")}
        return {"type": "generic"}

    def __str__(self):
        if self.kind == "rational":
            return format_fraction(self.value)
        if self.kind == "root":
            return f"root({self.modulus.format('t')})"
        return "generic"


@dataclass(frozen=True)
class NormalizationCert:
    """g(x, y) = f(x + shear*y, y) / scale; fiber g = l is fiber f = scale*l."""

    shear: Fraction
    scale: Fraction

    @property
    def is_identity(self) -> bool:
        return self.shear == 0 and self.scale == 1

    @property
    def lambda_map(self) -> str:
        if self.scale == 1:
            return "lambda -> lambda"
        return f"lambda -> lambda/{format_fraction(self.scale)}"

    def to_json(self) -> dict:
        return {
            "shear": format_fraction(self.shear),
            "scale": format_fraction(self.scale),
            "lambda_map": self.lambda_map,
        }


@dataclass(frozen=True)
class ResultantProfile:
    """Q(x, lam, u) = sum Q_i x^(N - i) = Res_y(f - lam, f_y - u)."""

    n: int
    coefficients: Tuple[MultiPoly, ...]

    @property
    def N(self) -> int:  # pylint: disable=invalid-name
        return len(self.coefficients) - 1

    @property
    def q0(self) -> MultiPoly:
        return self.coefficients[0]

    def polynomial(self) -> MultiPoly:
        x = MultiPoly.var("x")
        return sum((q * x ** (self.N - i) for i, q in enumerate(self.coefficients)), MultiPoly())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "coefficients": [str(q) for q in self.coefficients],
            "deg_u_Q0": self.q0.deg_in("u").to_json(),
        }


@dataclass(frozen=True)
class FiberProfile:
    """R(x, tau) = sum R_i x^(K - i) with R_0 nonzero."""

    coefficients: Tuple[MultiPoly, ...]

    @property
    def K(self) -> int:  # pylint: disable=invalid-name
        return len(self.coefficients) - 1

    def to_json(self) -> dict:
        return {"K": self.K, "coefficients": [str(r) for r in self.coefficients]}


class LemmaLP(NamedTuple):
    """Exponent of g on the zero set of h and the case of the formula that fired."""

    value: ExtRational
    case: str


@dataclass(frozen=True)
class ExponentRecord:
    lambda_point: LambdaPoint
    value: ExtRational
    case: str
    in_lambda: bool
    tilde_equal: bool = True

    def to_json(self) -> dict:
        return {
            "lambda": self.lambda_point.to_json(),
            "value": self.value.to_json(),
            "case": self.case,
            "in_Lambda": self.in_lambda,
            "tilde_equal": self.tilde_equal,
        }


@dataclass(frozen=True)
class FiberComparison:
    lambda_point: LambdaPoint
    near: ExtRational
    on_fiber: ExtRational
    relation: str
    reason: str

    def to_json(self) -> dict:
        return {
            "lambda": self.lambda_point.to_json(),
            "near": self.near.to_json(),
            "on_fiber": self.on_fiber.to_json(),
            "relation": self.relation,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class GlobalExponent:
    """The gradient exponent when determined, otherwise only the bound >= -1."""

    value: Optional[ExtRational]

    @property
    def determined(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        if self.value is None:
            return {"type": "undetermined", "lower_bound": "-1"}
        return self.value.to_json()


@dataclass(frozen=True)
class PuiseuxBranch:
    """
    One root of a polynomial in y over Laurent series in t, truncated.

    Terms of exponent >= floor are exact and the remainder has degree < floor;
    exact branches have no remainder.
    """

    series: LaurentPoly
    exact: bool
    floor: int
    ident: Tuple[int, int]

    def leading_degree(self) -> ExtRational:
        return self.series.degree()

    def sort_key(self):
        degree = self.series.degree()
        lead = str(self.series.leading_coefficient()) if self.series.terms else ""
        return (degree, lead, self.ident)


@dataclass(frozen=True)
class ContactMatrix:
    entries: Tuple[Tuple[ExtRational, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def to_json(self) -> List[List[Optional[dict]]]:
        return [
            [None if i == j else entry.to_json() for j, entry in enumerate(row)]
            for i, row in enumerate(self.entries)
        ]


@dataclass(frozen=True)
class PuiseuxBranchSet:
    """Roots beta of f(t^D, y) - lambda0 and gamma of f_y(t^D, y) / n."""

    D: int  # pylint: disable=invalid-name
    beta: Tuple[PuiseuxBranch, ...]
    gamma: Tuple[PuiseuxBranch, ...]
    contact: ContactMatrix
    cross: Tuple[Tuple[ExtRational, ...], ...]
    tower: Tower = field(default_factory=Tower)

    @property
    def truncation_order(self) -> Optional[int]:
        floors = [b.floor for b in self.beta + self.gamma if not b.exact]
        return min(floors) if floors else None

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "beta": [str(b.series) + ("" if b.exact else " + ...") for b in self.beta],
            "gamma": [str(g.series) + ("" if g.exact else " + ...") for g in self.gamma],
            "contact": self.contact.to_json(),
        }


@dataclass(frozen=True)
class WitnessReport:
    deg_phi: ExtRational
    deg_fiber: ExtRational
    deg_grad: ExtRational
    ratio: Optional[ExtRational]
    valid: bool
    partial_degrees: Tuple[ExtRational, ...] = ()

    def to_json(self) -> dict:
        return {
            "deg_phi": self.deg_phi.to_json(),
            "deg_fiber": self.deg_fiber.to_json(),
            "deg_grad": self.deg_grad.to_json(),
            "ratio": None if self.ratio is None else self.ratio.to_json(),
            "valid": self.valid,
        }


@dataclass(frozen=True)
class Prop621Result:
    """Either the conclusion exponent -1 or the reason it does not apply."""

    concluded: Optional[ExtRational]
    reason: str

    def to_json(self) -> dict:
        if self.concluded is None:
            return {"type": "not_applicable", "reason": self.reason}
        return {"type": "concluded", "value": self.concluded.to_json(), "reason": self.reason}


@dataclass(frozen=True)
class OracleReport:
    """Newton-Puiseux recomputation at one fiber value with agreement flags."""

    lambda_point: LambdaPoint
    branches: PuiseuxBranchSet
    prop22: Tuple[ExtRational, ExtRational, bool]
    lemma31: Tuple[ExtRational, ExtRational]
    lemma31_agrees: bool
    lemmad2: bool
    reconstruction: bool
    cor36: Optional[ExtRational] = None
    cor36_agrees: Optional[bool] = None

    @property
    def all_agree(self) -> bool:
        return (
            self.prop22[2]
            and self.lemma31_agrees
            and self.lemmad2
            and self.reconstruction
            and self.cor36_agrees is not False
        )

    def to_json(self) -> dict:
        return {
            "lambda": self.lambda_point.to_json(),
            "branches": self.branches.to_json(),
            "prop22": {
                "lhs": self.prop22[0].to_json(),
                "rhs": self.prop22[1].to_json(),
                "equal": self.prop22[2],
            },
            "lemma31": {
                "on_fiber": self.lemma31[0].to_json(),
                "on_critical": self.lemma31[1].to_json(),
                "agrees": self.lemma31_agrees,
            },
            "lemmad2": self.lemmad2,
            "reconstruction": self.reconstruction,
            "cor36": None if self.cor36 is None else {
                "value": self.cor36.to_json(),
                "agrees": self.cor36_agrees,
            },
        }


@dataclass(frozen=True)
class AnalysisReport:
    poly: MultiPoly
    normalized: MultiPoly
    cert: NormalizationCert
    profile: ResultantProfile
    lambda_set: Tuple[LambdaPoint, ...]
    generic: ExponentRecord
    special: Tuple[ExponentRecord, ...]
    comparisons: Tuple[FiberComparison, ...]
    k_inf: Tuple[LambdaPoint, ...]
    fedorjuk: Tuple[LambdaPoint, ...]
    affine_critical: Tuple[LambdaPoint, ...]
    bifurcation: Tuple[LambdaPoint, ...]
    global_gradient: GlobalExponent
    generic_probes: Tuple[ExponentRecord, ...] = ()
    oracle: Tuple[OracleReport, ...] = ()

    def to_json(self) -> dict:
        return {
            "poly": str(self.poly),
            "normalized": str(self.normalized),
            "normalization": self.cert.to_json(),
            "profile": {"N": self.profile.N, "deg_u_Q0": self.profile.q0.deg_in("u").to_json()},
            "lambda_set": [p.to_json() for p in self.lambda_set],
            "generic": self.generic.to_json(),
            "special": [r.to_json() for r in self.special],
            "comparisons": [c.to_json() for c in self.comparisons],
            "K_inf": [p.to_json() for p in self.k_inf],
            "fedorjuk": [p.to_json() for p in self.fedorjuk],
            "affine_critical": [p.to_json() for p in self.affine_critical],
            "bifurcation": [p.to_json() for p in self.bifurcation],
            "global_gradient": self.global_gradient.to_json(),
            "generic_probes": [r.to_json() for r in self.generic_probes],
            "oracle": {
                "checked": len(self.oracle),
                "all_agree": all(o.all_agree for o in self.oracle),
                "reports": [o.to_json() for o in self.oracle],
            },
        }

