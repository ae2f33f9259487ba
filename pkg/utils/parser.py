"""
Recursive descent parser for polynomial and Laurent curve expressions.

Grammar (whitespace is insignificant, no implicit multiplication):

    expr     := [sign] term (sign term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | name | '(' expr ')'
    rational := int ('/' posint)?

In curve mode the curve parameter may also be raised to a negative integer
power, as in t^-2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from models.laurent import LaurentPoly
from models.polynomial import MultiPoly
from models.univariate import UniPoly
from utils.exceptions import ParseError


@dataclass(frozen=True)
class Token:
    """A lexical token with its 1-based column."""

    kind: str
    text: str
    column: int


_SYMBOLS = {"+": "plus", "-": "minus", "*": "star", "/": "slash", "^": "caret",
            "(": "lparen", ")": "rparen", ",": "comma"}


def tokenize(src: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(src) and src[i].isdigit():
                i += 1
            tokens.append(Token("int", src[start:i], start + 1))
        elif ch.isalpha() or ch == "_":
            start = i
            while i < len(src) and (src[i].isalnum() or src[i] == "_"):
                i += 1
            tokens.append(Token("name", src[start:i], start + 1))
        elif ch in _SYMBOLS:
            tokens.append(Token(_SYMBOLS[ch], ch, i + 1))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i + 1)
    tokens.append(Token("end", "", len(src) + 1))
    return tokens


class _Parser:
    """Parser over a token list; values are MultiPoly or LaurentPoly."""

    def __init__(self, src: str, variables: Sequence[str], parameter: Optional[str] = None):
        self.tokens = tokenize(src)
        self.position = 0
        self.variables = set(variables)
        self.parameter = parameter

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            raise ParseError(f"expected {what}", self.current.column)
        return self.advance()

    def constant(self, value: Fraction):
        if self.parameter:
            return LaurentPoly.constant(value, self.parameter)
        return MultiPoly.constant(value)

    def expr(self):
        sign = 1
        if self.current.kind in ("plus", "minus"):
            sign = -1 if self.advance().kind == "minus" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.current.kind in ("plus", "minus"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "plus" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.current.kind == "star":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self):
        start = self.current
        value = self.base()
        if self.current.kind != "caret":
            return value
        self.advance()
        negative = False
        if (
            self.parameter
            and start.kind == "name"
            and start.text == self.parameter
            and self.current.kind == "minus"
        ):
            self.advance()
            negative = True
        exponent = int(self.expect("int", "exponent").text)
        if negative:
            return LaurentPoly.monomial(1, -exponent, self.parameter)
        return value ** exponent

    def base(self):
        token = self.current
        if token.kind == "int":
            self.advance()
            value = Fraction(int(token.text))
            if self.current.kind == "slash":
                self.advance()
                denominator = self.expect("int", "denominator")
                if int(denominator.text) == 0:
                    raise ParseError("zero denominator", denominator.column)
                value = value / int(denominator.text)
            return self.constant(value)
        if token.kind == "name":
            self.advance()
            if self.parameter:
                if token.text != self.parameter:
                    raise ParseError(f"unknown variable {token.text!r}", token.column)
                return LaurentPoly.monomial(1, 1, self.parameter)
            if token.text not in self.variables:
                raise ParseError(f"unknown variable {token.text!r}", token.column)
            return MultiPoly.var(token.text)
        if token.kind == "lparen":
            self.advance()
            value = self.expr()
            self.expect("rparen", "')'")
            return value
        raise ParseError("expected a number, a variable or '('", token.column)


def parse_poly(src: str, variables: Sequence[str] = ("x", "y")) -> MultiPoly:
    """Parse a polynomial over Q in the given variables."""
    parser = _Parser(src, variables)
    value = parser.expr()
    if parser.current.kind != "end":
        raise ParseError("unexpected input", parser.current.column)
    return value


def parse_curve(src: str, parameter: str = "t") -> List[LaurentPoly]:
    """Parse comma separated Laurent polynomials in the parameter."""
    parser = _Parser(src, (), parameter)
    components = [parser.expr()]
    while parser.current.kind == "comma":
        parser.advance()
        components.append(parser.expr())
    if parser.current.kind != "end":
        raise ParseError("unexpected input", parser.current.column)
    return components


def parse_rational(src: str) -> Fraction:
    value = parse_poly(src, ())
    return Fraction(value.constant_value())


def parse_lambda(src: str) -> Tuple[str, object]:
    """
    Parse a fiber value specification.

    Returns:
        ("generic", None), ("rational", Fraction) or ("root", UniPoly).
    """
    text = src.strip()
    if text == "generic":
        return "generic", None
    if text.startswith("root(") and text.endswith(")"):
        offset = src.index("(") + 1
        try:
            poly = parse_poly(text[5:-1], ("t",))
        except ParseError as e:
            raise ParseError(str(e).split(" at column")[0], e.column + offset) from e
        return "root", UniPoly.from_multipoly(poly, "t")
    return "rational", parse_rational(text)
