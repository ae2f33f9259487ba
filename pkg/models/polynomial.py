"""
Sparse exact multivariate polynomials.

Coefficients are Fractions or AlgebraicScalars. A polynomial only lists the
variables that occur in its terms, in the fixed order x, y, z, lam, u, tau, t
followed by any other name alphabetically. Terms are printed in graded
lexicographic order, highest first.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from models.algebraic import AlgebraicScalar
from models.scalars import NEG_INFINITY, ExtRational, format_fraction

VARIABLE_ORDER = ("x", "y", "z", "lam", "u", "tau", "t")

Scalar = Union[Fraction, AlgebraicScalar]
Exponents = Tuple[int, ...]


def variable_key(name: str):
    if name in VARIABLE_ORDER:
        return (VARIABLE_ORDER.index(name), "")
    return (len(VARIABLE_ORDER), name)


def as_scalar(value) -> Scalar:
    if isinstance(value, AlgebraicScalar):
        return value
    return Fraction(value)


def format_scalar(value: Scalar) -> str:
    if isinstance(value, Fraction):
        return format_fraction(value)
    text = str(value)
    return f"({text})" if " " in text else text


class MultiPoly:
    """An immutable sparse polynomial."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[Exponents, Scalar] = None):
        variables = tuple(variables)
        order = sorted(range(len(variables)), key=lambda i: variable_key(variables[i]))
        collected: Dict[Exponents, Scalar] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps[i] for i in order)
            collected[key] = collected[key] + as_scalar(coeff) if key in collected else as_scalar(coeff)
        collected = {k: v for k, v in collected.items() if v}
        used = [i for i in range(len(order)) if any(k[i] for k in collected)]
        self.variables = tuple(variables[order[i]] for i in used)
        self.terms = {tuple(k[i] for i in used): v for k, v in collected.items()}
        self._hash = None

    # Constructors

    @classmethod
    def constant(cls, value) -> "MultiPoly":
        return cls((), {(): as_scalar(value)})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def from_coefficients(cls, name: str, coefficients: List["MultiPoly"]) -> "MultiPoly":
        """Sum of coefficients[k] * name^k."""
        result = cls()
        power = cls.constant(1)
        base = cls.var(name)
        for coeff in coefficients:
            result = result + coeff * power
            power = power * base
        return result

    @staticmethod
    def lift(value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(value)

    # Inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if self.variables:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def deg_in(self, name: str) -> ExtRational:
        if self.is_zero:
            return NEG_INFINITY
        if name not in self.variables:
            return ExtRational(0)
        index = self.variables.index(name)
        return ExtRational(max(exps[index] for exps in self.terms))

    def total_degree(self) -> ExtRational:
        if self.is_zero:
            return NEG_INFINITY
        return ExtRational(max(sum(exps) for exps in self.terms))

    def leading_term(self) -> Tuple[Exponents, Scalar]:
        exps = max(self.terms, key=lambda e: (sum(e), e))
        return exps, self.terms[exps]

    def degree_form(self) -> "MultiPoly":
        top = self.total_degree()
        return MultiPoly(
            self.variables, {e: c for e, c in self.terms.items() if sum(e) == top.value}
        )

    def coefficients_in(self, name: str) -> List["MultiPoly"]:
        """Coefficients of the powers of name, lowest first (empty for zero)."""
        if self.is_zero:
            return []
        if name not in self.variables:
            return [self]
        index = self.variables.index(name)
        rest = self.variables[:index] + self.variables[index + 1:]
        buckets: Dict[int, Dict[Exponents, Scalar]] = {}
        for exps, coeff in self.terms.items():
            buckets.setdefault(exps[index], {})[exps[:index] + exps[index + 1:]] = coeff
        top = max(buckets)
        return [MultiPoly(rest, buckets.get(k, {})) for k in range(top + 1)]

    # Arithmetic

    def expanded(self, names: List[str]) -> Dict[Exponents, Scalar]:
        """Terms keyed by exponent vectors over names (a superset of variables)."""
        positions = [names.index(v) for v in self.variables]
        out = {}
        for exps, coeff in self.terms.items():
            full = [0] * len(names)
            for pos, e in zip(positions, exps):
                full[pos] = e
            out[tuple(full)] = coeff
        return out

    def _aligned(self, other: "MultiPoly"):
        names = sorted(set(self.variables) | set(other.variables), key=variable_key)
        return names, self.expanded(names), other.expanded(names)

    def __add__(self, other):
        other = MultiPoly.lift(other)
        names, left, right = self._aligned(other)
        for exps, coeff in right.items():
            left[exps] = left[exps] + coeff if exps in left else coeff
        return MultiPoly(names, left)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MultiPoly.lift(other))

    def __rsub__(self, other):
        return MultiPoly.lift(other) - self

    def __mul__(self, other):
        other = MultiPoly.lift(other)
        if self.is_zero or other.is_zero:
            return MultiPoly()
        names, left, right = self._aligned(other)
        out: Dict[Exponents, Scalar] = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                product = c1 * c2
                out[key] = out[key] + product if key in out else product
        return MultiPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = MultiPoly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor) -> "MultiPoly":
        factor = as_scalar(factor)
        return MultiPoly(self.variables, {e: c * factor for e, c in self.terms.items()})

    def derivative(self, name: str) -> "MultiPoly":
        if name not in self.variables:
            return MultiPoly()
        index = self.variables.index(name)
        out = {}
        for exps, coeff in self.terms.items():
            if exps[index]:
                lowered = exps[:index] + (exps[index] - 1,) + exps[index + 1:]
                out[lowered] = coeff * exps[index]
        return MultiPoly(self.variables, out)

    def substitute(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Replace variables by polynomials or scalars."""
        images = [MultiPoly.lift(mapping[v]) if v in mapping else MultiPoly.var(v)
                  for v in self.variables]
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(index, e):
            if (index, e) not in powers:
                powers[(index, e)] = images[index] ** e
            return powers[(index, e)]

        result = MultiPoly()
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(coeff)
            for index, e in enumerate(exps):
                if e:
                    term = term * power(index, e)
            result = result + term
        return result

    def exact_divide(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ValueError otherwise."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        names = sorted(set(self.variables) | set(divisor.variables), key=variable_key)
        d_terms = divisor.expanded(names)
        d_lead = max(d_terms, key=lambda e: (sum(e), e))
        d_coeff = d_terms[d_lead]
        inv = 1 / d_coeff if isinstance(d_coeff, Fraction) else d_coeff.inverse()
        quotient: Dict[Exponents, Scalar] = {}
        remainder = self
        while not remainder.is_zero:
            r_exps = remainder.expanded(names)
            lead = max(r_exps, key=lambda e: (sum(e), e))
            shift = tuple(a - b for a, b in zip(lead, d_lead))
            if any(s < 0 for s in shift):
                raise ValueError(f"{divisor} does not divide {self}")
            coeff = r_exps[lead] * inv
            quotient[shift] = coeff
            remainder = remainder - MultiPoly(names, {shift: coeff}) * divisor
        return MultiPoly(names, quotient)

    def map_coefficients(self, function) -> "MultiPoly":
        return MultiPoly(self.variables, {e: function(c) for e, c in self.terms.items()})

    # Comparison and printing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicScalar)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> List[Tuple[Exponents, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self):
        if self.is_zero:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps)
                if e
            )
            if not monomial:
                pieces.append(format_scalar(coeff))
            elif coeff == 1:
                pieces.append(monomial)
            elif coeff == -1:
                pieces.append("-" + monomial)
            else:
                pieces.append(f"{format_scalar(coeff)}*{monomial}")
        text = pieces[0]
        for piece in pieces[1:]:
            text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return text

    def __repr__(self):
        return f"MultiPoly({self})"
