"""
Exact scalar value types: extended rationals and the order sentinel.

Classes:
    ExtRational: a rational number or negative infinity, totally ordered.

Constants:
    NEG_INFINITY: the bottom element of ExtRational.
    POS_INFINITY: returned by ord_at for the zero polynomial only.
"""

from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

RationalLike = Union[int, Fraction]


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Convert an int, a "p/q" string or a Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as "p" or "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@total_ordering
class ExtRational:
    """A rational number or negative infinity."""

    __slots__ = ("_value",)

    def __init__(self, value: Optional[RationalLike] = None):
        self._value = None if value is None else Fraction(value)

    @classmethod
    def of(cls, value: Union["ExtRational", RationalLike]) -> "ExtRational":
        if isinstance(value, ExtRational):
            return value
        return cls(value)

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> Fraction:
        if self._value is None:
            raise ValueError("negative infinity has no rational value")
        return self._value

    def __add__(self, other):
        other = ExtRational.of(other)
        if not self.is_finite or not other.is_finite:
            return NEG_INFINITY
        return ExtRational(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other: RationalLike) -> "ExtRational":
        if isinstance(other, ExtRational):
            other = other.value
        if not self.is_finite:
            return NEG_INFINITY
        return ExtRational(self._value - other)

    def __mul__(self, other: RationalLike) -> "ExtRational":
        """Scale by a positive rational; the bottom element is absorbing."""
        other = Fraction(other)
        if other <= 0:
            raise ValueError("ExtRational can only be scaled by a positive rational")
        if not self.is_finite:
            return NEG_INFINITY
        return ExtRational(self._value * other)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "ExtRational":
        return self * (1 / Fraction(other))

    def reciprocal(self) -> "ExtRational":
        if not self.is_finite or self._value == 0:
            raise ZeroDivisionError("reciprocal of %s" % self)
        return ExtRational(1 / self._value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExtRational(other)
        if not isinstance(other, ExtRational):
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExtRational(other)
        if not isinstance(other, ExtRational):
            return NotImplemented
        if self._value is None:
            return other._value is not None
        if other._value is None:
            return False
        return self._value < other._value

    def __hash__(self):
        return hash(("ExtRational", self._value))

    def __repr__(self):
        return f"ExtRational({str(self)})"

    def __str__(self):
        if self._value is None:
            return "-inf"
        return format_fraction(self._value)

    def to_json(self) -> dict:
        if self._value is None:
            return {"type": "neg_infinity"}
        return {"type": "rational", "value": format_fraction(self._value)}

    @classmethod
    def from_json(cls, document: dict) -> "ExtRational":
        if document["type"] == "neg_infinity":
            return NEG_INFINITY
        return cls(Fraction(document["value"]))


NEG_INFINITY = ExtRational()


class _PosInfinity:
    """Order of vanishing of the zero polynomial; larger than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("POS_INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "POS_INFINITY"

    __str__ = __repr__


POS_INFINITY = _PosInfinity()


def ext_max(values) -> ExtRational:
    """Maximum of ExtRational values; NEG_INFINITY for an empty collection."""
    result = NEG_INFINITY
    for value in values:
        value = ExtRational.of(value)
        if value > result:
            result = value
    return result


def ext_min(values) -> ExtRational:
    """Minimum of ExtRational values; the collection must not be empty."""
    values = [ExtRational.of(value) for value in values]
    if not values:
        raise ValueError("ext_min of an empty collection")
    return min(values)
