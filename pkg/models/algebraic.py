"""
Algebraic numbers by dynamic evaluation over towers of squarefree moduli.

A tower of depth k is a list of monic moduli m_1(t_1), ..., m_k(t_k) where the
coefficients of m_j are elements of the tower of depth j - 1. Elements are
stored as nested tuples: level 0 is a Fraction, level j is a tuple of
deg m_j elements of level j - 1 (coefficients of 1, t_j, t_j^2, ...). Every
stored element is reduced, so structural equality is ring equality.

The ring is a product of fields. When an inversion meets a zero divisor the
modulus that caused it is split and TowerSplit is raised; callers fork the
computation over the factors with resolve_splits.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple, TypeVar

from models.scalars import format_fraction

T = TypeVar("T")


class TowerSplit(Exception):
    """A modulus of the tower factors as factors[0] * factors[1]."""

    def __init__(self, level: int, factors: Tuple[tuple, tuple]):
        super().__init__(f"modulus at level {level} splits")
        self.level = level
        self.factors = factors


# Elements at a fixed level


def _degree(moduli, level: int) -> int:
    return len(moduli[level - 1]) - 1


def _zero(moduli, level: int):
    if level == 0:
        return Fraction(0)
    return tuple(_zero(moduli, level - 1) for _ in range(_degree(moduli, level)))


def _embed(moduli, level: int, value: Fraction):
    if level == 0:
        return Fraction(value)
    rest = tuple(_zero(moduli, level - 1) for _ in range(_degree(moduli, level) - 1))
    return (_embed(moduli, level - 1, value),) + rest


def _is_zero(rep) -> bool:
    if isinstance(rep, Fraction):
        return rep == 0
    return all(_is_zero(c) for c in rep)


def _add(a, b):
    if isinstance(a, Fraction):
        return a + b
    return tuple(_add(x, y) for x, y in zip(a, b))


def _neg(a):
    if isinstance(a, Fraction):
        return -a
    return tuple(_neg(x) for x in a)


def _sub(a, b):
    if isinstance(a, Fraction):
        return a - b
    return tuple(_sub(x, y) for x, y in zip(a, b))


def _mul(moduli, level: int, a, b):
    if level == 0:
        return a * b
    return _reduce(moduli, level, _p_mul(moduli, level - 1, list(a), list(b)))


def _reduce(moduli, level: int, coeffs: List):
    """Reduce a polynomial over level - 1 modulo m_level."""
    modulus = moduli[level - 1]
    d = len(modulus) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if _is_zero(c):
            continue
        for j in range(d):
            coeffs[i - d + j] = _sub(coeffs[i - d + j], _mul(moduli, level - 1, c, modulus[j]))
        coeffs[i] = _zero(moduli, level - 1)
    while len(coeffs) < d:
        coeffs.append(_zero(moduli, level - 1))
    return tuple(coeffs[:d])


def _lift(moduli, source: int, target: int, rep):
    while source < target:
        source += 1
        rest = tuple(_zero(moduli, source - 1) for _ in range(_degree(moduli, source) - 1))
        rep = (rep,) + rest
    return rep


def _drop(rep):
    """Lowest level representation of an element lifted from below."""
    while not isinstance(rep, Fraction) and all(_is_zero(c) for c in rep[1:]):
        rep = rep[0]
    return rep


def _inverse(moduli, level: int, a):
    if level == 0:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / a
    if _is_zero(a):
        raise ZeroDivisionError("division by zero in an algebraic extension")
    below = level - 1
    r0, r1 = list(moduli[level - 1]), _p_trim(list(a))
    s0, s1 = [], [_embed(moduli, below, Fraction(1))]
    while True:
        r1, inv_lc = _p_certify(moduli, below, r1)
        if len(r1) == 1:
            return _reduce(moduli, level, _p_scale(moduli, below, s1, inv_lc))
        quotient, remainder = _p_divmod(moduli, below, r0, r1, inv_lc)
        r0, r1 = r1, remainder
        s0, s1 = s1, _p_sub(s0, _p_mul(moduli, below, quotient, s1))
        if not r1:
            gcd = _p_scale(moduli, below, r0, inv_lc)
            cofactor, _ = _p_divmod(moduli, below, list(moduli[level - 1]), gcd,
                                    _embed(moduli, below, Fraction(1)))
            logging.debug("Tower split at level %d: degrees %d and %d",
                          level, len(gcd) - 1, len(cofactor) - 1)
            raise TowerSplit(level, (tuple(gcd), tuple(cofactor)))


# Polynomials with coefficients at a fixed level (lists, low degree first)


def _p_trim(p: List) -> List:
    while p and _is_zero(p[-1]):
        p.pop()
    return p


def _p_sub(a: List, b: List) -> List:
    size = max(len(a), len(b))
    out = []
    for i in range(size):
        if i >= len(a):
            out.append(_neg(b[i]))
        elif i >= len(b):
            out.append(a[i])
        else:
            out.append(_sub(a[i], b[i]))
    return _p_trim(out)


def _p_mul(moduli, level: int, a: List, b: List) -> List:
    if not a or not b:
        return []
    out = [_zero(moduli, level) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if _is_zero(x):
            continue
        for j, y in enumerate(b):
            if not _is_zero(y):
                out[i + j] = _add(out[i + j], _mul(moduli, level, x, y))
    return out


def _p_scale(moduli, level: int, p: List, c) -> List:
    return _p_trim([_mul(moduli, level, x, c) for x in p])


def _p_certify(moduli, level: int, p: List):
    """Drop zero leading coefficients; the remaining one must be a unit."""
    p = _p_trim(list(p))
    if not p:
        return p, None
    return p, _inverse(moduli, level, p[-1])


def _p_divmod(moduli, level: int, a: List, b: List, inv_lc):
    remainder = list(a)
    db = len(b) - 1
    quotient = [_zero(moduli, level) for _ in range(max(len(a) - db, 0))]
    for i in range(len(remainder) - 1, db - 1, -1):
        c = remainder[i]
        if _is_zero(c):
            continue
        factor = _mul(moduli, level, c, inv_lc)
        quotient[i - db] = factor
        for j in range(db + 1):
            remainder[i - db + j] = _sub(remainder[i - db + j], _mul(moduli, level, factor, b[j]))
    return _p_trim(quotient), _p_trim(remainder[:db])


def _restrict(old_moduli, new_moduli, level: int, changed: int, rep):
    if level < changed:
        return rep
    inner = [_restrict(old_moduli, new_moduli, level - 1, changed, c) for c in rep]
    if level == changed:
        return _reduce(new_moduli, level, inner)
    return tuple(inner)


# Public types


def _format_rep(rep, level: int) -> str:
    if level == 0:
        return format_fraction(rep)
    name = generator_name(level)
    parts = []
    for power in range(len(rep) - 1, -1, -1):
        c = rep[power]
        if _is_zero(c):
            continue
        body = _format_rep(c, level - 1)
        monomial = "" if power == 0 else (name if power == 1 else f"{name}^{power}")
        if not monomial:
            parts.append(body)
        elif body == "1":
            parts.append(monomial)
        elif body == "-1":
            parts.append("-" + monomial)
        elif " " in body:
            parts.append(f"({body})*{monomial}")
        else:
            parts.append(f"{body}*{monomial}")
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        text += " - " + part[1:] if part.startswith("-") else " + " + part
    return text


def generator_name(level: int) -> str:
    return "t" if level == 1 else f"t{level}"


@dataclass(frozen=True)
class Tower:
    """An ordered list of monic squarefree moduli."""

    moduli: tuple = ()

    @property
    def depth(self) -> int:
        return len(self.moduli)

    def extend(self, modulus: Sequence) -> "Tower":
        modulus = tuple(_lift_coefficient(self, c) for c in modulus)
        if len(modulus) < 2 or _drop(modulus[-1]) != Fraction(1):
            raise ValueError("tower moduli must be monic of positive degree")
        return Tower(self.moduli + (modulus,))

    def prefix(self, depth: int) -> "Tower":
        return Tower(self.moduli[:depth])

    def is_prefix_of(self, other: "Tower") -> bool:
        return other.moduli[: self.depth] == self.moduli

    def split(self, level: int, factor: tuple) -> "Tower":
        """Replace the modulus at level by one of its factors."""
        moduli = list(self.moduli)
        moduli[level - 1] = tuple(factor)
        for upper in range(level + 1, self.depth + 1):
            moduli[upper - 1] = tuple(
                _restrict(self.moduli, moduli, upper - 1, level, c)
                for c in self.moduli[upper - 1]
            )
        return Tower(tuple(moduli))

    def generator(self, level: int = 0) -> "AlgebraicScalar":
        level = level or self.depth
        one = _embed(self.moduli, level - 1, Fraction(1))
        zero = _zero(self.moduli, level - 1)
        if _degree(self.moduli, level) == 1:
            rep = (_neg(self.moduli[level - 1][0]),)
        else:
            rep = (zero, one) + tuple(zero for _ in range(_degree(self.moduli, level) - 2))
        return AlgebraicScalar(self, _lift(self.moduli, level, self.depth, rep))

    def modulus_text(self, level: int) -> str:
        """The modulus at level as a polynomial in that level's generator."""
        return _format_rep(self.moduli[level - 1], level)

    def __str__(self):
        return "; ".join(self.modulus_text(level) for level in range(1, self.depth + 1))


def _lift_coefficient(tower: Tower, value):
    if isinstance(value, AlgebraicScalar):
        return value.lift(tower).rep
    if isinstance(value, (int, Fraction)):
        return _embed(tower.moduli, tower.depth, Fraction(value))
    return value


class AlgebraicScalar:
    """An element of a tower ring, stored as a reduced representative."""

    __slots__ = ("tower", "rep")

    def __init__(self, tower: Tower, rep):
        self.tower = tower
        self.rep = rep

    @classmethod
    def constant(cls, tower: Tower, value) -> "AlgebraicScalar":
        return cls(tower, _embed(tower.moduli, tower.depth, Fraction(value)))

    def lift(self, tower: Tower) -> "AlgebraicScalar":
        if tower.depth == self.tower.depth:
            return self
        if not self.tower.is_prefix_of(tower):
            raise ValueError("algebraic scalars live in incompatible towers")
        return AlgebraicScalar(tower, _lift(tower.moduli, self.tower.depth, tower.depth, self.rep))

    def _pair(self, other):
        if isinstance(other, AlgebraicScalar):
            tower = other.tower if other.tower.depth > self.tower.depth else self.tower
            return tower, self.lift(tower).rep, other.lift(tower).rep
        if isinstance(other, (int, Fraction)):
            return self.tower, self.rep, _embed(self.tower.moduli, self.tower.depth, Fraction(other))
        return None

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return AlgebraicScalar(pair[0], _add(pair[1], pair[2]))

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return AlgebraicScalar(pair[0], _sub(pair[1], pair[2]))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgebraicScalar(self.tower, _neg(self.rep))

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        tower = pair[0]
        return AlgebraicScalar(tower, _mul(tower.moduli, tower.depth, pair[1], pair[2]))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicScalar":
        """Inverse modulo the tower; raises TowerSplit on a zero divisor."""
        return AlgebraicScalar(self.tower, _inverse(self.tower.moduli, self.tower.depth, self.rep))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, AlgebraicScalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        result = AlgebraicScalar.constant(self.tower, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self):
        return not _is_zero(self.rep)

    def rational_value(self):
        """The Fraction this element equals, or None when it is not rational."""
        value = _drop(self.rep)
        return value if isinstance(value, Fraction) else None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.rational_value() == Fraction(other)
        if isinstance(other, AlgebraicScalar):
            pair = self._pair(other)
            return pair[1] == pair[2]
        return NotImplemented

    def __hash__(self):
        return hash(_drop(self.rep))

    def sort_key(self) -> str:
        return str(self)

    def __str__(self):
        value = _drop(self.rep)
        if isinstance(value, Fraction):
            return _format_rep(value, 0)
        level = self.tower.depth
        rep = self.rep
        while level > 0 and all(_is_zero(c) for c in rep[1:]):
            rep, level = rep[0], level - 1
        return _format_rep(rep, level)

    def __repr__(self):
        return f"AlgebraicScalar({self} mod {self.tower})"


class ZeroTestOutcome(Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    SPLIT = "split"


@dataclass(frozen=True)
class ZeroTest:
    """Result of alg_is_zero; factors are set for SPLIT only."""

    outcome: ZeroTestOutcome
    level: int = 0
    factors: tuple = ()


def alg_is_zero(value: AlgebraicScalar) -> ZeroTest:
    """Decide whether value is zero, a unit, or a zero divisor of the tower."""
    if not value:
        return ZeroTest(ZeroTestOutcome.ZERO)
    try:
        value.inverse()
    except TowerSplit as split:
        return ZeroTest(ZeroTestOutcome.SPLIT, split.level, split.factors)
    return ZeroTest(ZeroTestOutcome.NONZERO)


def decide_zero(value) -> bool:
    """Zero test for any scalar; raises TowerSplit on a zero divisor."""
    if isinstance(value, AlgebraicScalar):
        if not value:
            return True
        value.inverse()
        return False
    return value == 0


def inverse(value):
    """Inverse of a Fraction or AlgebraicScalar."""
    if isinstance(value, AlgebraicScalar):
        return value.inverse()
    return 1 / Fraction(value)


def resolve_splits(
    compute: Callable[[Tower], T],
    tower: Tower,
    min_level: int = 1,
    reverse: bool = False,
) -> List[Tuple[Tower, T]]:
    """
    Run compute over every branch of the tower.

    Args:
        compute: function of a tower; may raise TowerSplit.
        tower: the starting tower.
        min_level: splits below this level are re-raised to the caller.
        reverse: resolve the second factor of every split first.

    Returns:
        list of (refined tower, result), one per branch.
    """
    pending = [tower]
    results = []
    while pending:
        current = pending.pop(0)
        try:
            results.append((current, compute(current)))
        except TowerSplit as split:
            if split.level < min_level or split.level > current.depth:
                raise
            branches = [current.split(split.level, factor) for factor in split.factors]
            if reverse:
                branches.reverse()
            pending[0:0] = branches
    return results
