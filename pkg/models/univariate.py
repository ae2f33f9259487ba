"""
Dense univariate polynomials over Q or over a tower ring.
"""

from fractions import Fraction
from typing import Sequence, Tuple

from models.algebraic import decide_zero, inverse
from models.polynomial import MultiPoly, Scalar, as_scalar


class UniPoly:
    """Coefficients stored lowest degree first, without zero top coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = [as_scalar(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs: Tuple[Scalar, ...] = tuple(coeffs)

    @classmethod
    def from_multipoly(cls, poly: MultiPoly, name: str) -> "UniPoly":
        extra = set(poly.variables) - {name}
        if extra:
            raise ValueError(f"{poly} is not univariate in {name}")
        return cls([c.constant_value() for c in poly.coefficients_in(name)])

    def to_multipoly(self, name: str) -> MultiPoly:
        return MultiPoly((name,), {(k,): c for k, c in enumerate(self.coeffs)})

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1]

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def scale(self, factor) -> "UniPoly":
        return UniPoly([c * factor for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, value):
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def certified(self) -> "UniPoly":
        """Drop leading coefficients that are zero; the new one is a unit."""
        coeffs = list(self.coeffs)
        while coeffs and decide_zero(coeffs[-1]):
            coeffs.pop()
        return UniPoly(coeffs)

    def monic(self) -> "UniPoly":
        poly = self.certified()
        if poly.is_zero:
            raise ZeroDivisionError("the zero polynomial has no monic associate")
        return poly.scale(inverse(poly.lc))

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        divisor = other.certified()
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        inv = inverse(divisor.lc)
        remainder = list(self.coeffs)
        d = divisor.degree
        quotient = [Fraction(0)] * max(len(remainder) - d, 0)
        for i in range(len(remainder) - 1, d - 1, -1):
            c = remainder[i]
            if not c:
                continue
            factor = c * inv
            quotient[i - d] = factor
            for j, b in enumerate(divisor.coeffs):
                remainder[i - d + j] = remainder[i - d + j] - factor * b
        return UniPoly(quotient), UniPoly(remainder[:d])

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        quotient, remainder = self.divmod(other)
        if not remainder.certified().is_zero:
            raise ValueError(f"{other} does not divide {self}")
        return quotient

    @staticmethod
    def gcd(a: "UniPoly", b: "UniPoly") -> "UniPoly":
        """Monic gcd; raises TowerSplit when a zero divisor is met."""
        a, b = a.certified(), b.certified()
        while not b.is_zero:
            a, b = b, a.divmod(b)[1].certified()
        if a.is_zero:
            return a
        return a.monic()

    def taylor_shift(self, value) -> "UniPoly":
        """The polynomial p(X + value)."""
        coeffs = list(self.coeffs)
        n = len(coeffs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                coeffs[j] = coeffs[j] + coeffs[j + 1] * value
        return UniPoly(coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def format(self, name: str = "t") -> str:
        return str(self.to_multipoly(name))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({self})"

