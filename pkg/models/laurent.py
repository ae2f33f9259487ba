"""
Laurent polynomials in one parameter.
"""

from fractions import Fraction
from typing import Dict, Mapping

from models.algebraic import decide_zero
from models.polynomial import MultiPoly, Scalar, as_scalar, format_scalar
from models.scalars import NEG_INFINITY, ExtRational


class LaurentPoly:
    """A finite sum of c * t^k with k any integer."""

    __slots__ = ("parameter", "terms")

    def __init__(self, terms: Mapping[int, Scalar] = None, parameter: str = "t"):
        self.parameter = parameter
        self.terms: Dict[int, Scalar] = {
            int(k): as_scalar(c) for k, c in (terms or {}).items() if c
        }

    @classmethod
    def constant(cls, value, parameter: str = "t") -> "LaurentPoly":
        return cls({0: value}, parameter)

    @classmethod
    def monomial(cls, coeff, exponent: int, parameter: str = "t") -> "LaurentPoly":
        return cls({exponent: coeff}, parameter)

    @classmethod
    def from_multipoly(cls, poly: MultiPoly, parameter: str = "t") -> "LaurentPoly":
        """Read a polynomial in the parameter (non-negative powers only)."""
        coeffs = poly.coefficients_in(parameter)
        if any(not c.is_constant for c in coeffs):
            raise ValueError(f"{poly} is not univariate in {parameter}")
        return cls({k: c.constant_value() for k, c in enumerate(coeffs)}, parameter)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> ExtRational:
        """Largest stored exponent; NEG_INFINITY for zero."""
        if not self.terms:
            return NEG_INFINITY
        return ExtRational(max(self.terms))

    def certified_degree(self) -> ExtRational:
        """Largest exponent whose coefficient is certified nonzero."""
        for k in sorted(self.terms, reverse=True):
            if not decide_zero(self.terms[k]):
                return ExtRational(k)
        return NEG_INFINITY

    def low_degree(self) -> ExtRational:
        if not self.terms:
            return NEG_INFINITY
        return ExtRational(min(self.terms))

    def coefficient(self, exponent: int) -> Scalar:
        return self.terms.get(exponent, Fraction(0))

    def leading_coefficient(self) -> Scalar:
        return self.terms[max(self.terms)]

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other, self.parameter)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(out, self.parameter)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.parameter)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other, self.parameter)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        out: Dict[int, Scalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return LaurentPoly(out, self.parameter)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = LaurentPoly.constant(1, self.parameter)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor) -> "LaurentPoly":
        return LaurentPoly({k: c * factor for k, c in self.terms.items()}, self.parameter)

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by t^exponent."""
        return LaurentPoly({k + exponent: c for k, c in self.terms.items()}, self.parameter)

    def rescale(self, factor: int) -> "LaurentPoly":
        """Substitute t -> t^factor for a positive integer factor."""
        return LaurentPoly({k * factor: c for k, c in self.terms.items()}, self.parameter)

    def truncate_below(self, exponent: int) -> "LaurentPoly":
        """Keep the terms of exponent at least the given one."""
        return LaurentPoly({k: c for k, c in self.terms.items() if k >= exponent}, self.parameter)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.parameter)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        name = self.parameter
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            monomial = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
            if not monomial:
                pieces.append(format_scalar(c))
            elif c == 1:
                pieces.append(monomial)
            elif c == -1:
                pieces.append("-" + monomial)
            else:
                pieces.append(f"{format_scalar(c)}*{monomial}")
        text = pieces[0]
        for piece in pieces[1:]:
            text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return text

    def __repr__(self):
        return f"LaurentPoly({self})"
