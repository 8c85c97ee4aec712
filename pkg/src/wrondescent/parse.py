"""Text forms for fields, field elements and rational functions.

The expression grammar is deliberately small:

    ratexpr := poly ('/' poly)?
    poly    := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' nat)?
    atom    := nat | 'x' | 't' | '(' poly ')' | '-' factor

so there is exactly one optional top-level division and no implicit
multiplication ("2x" is a parse error; write "2*x").  't' denotes the
generator of the field extension and is rejected over prime fields.
Everything the package renders parses back to an equal value.
"""

from __future__ import annotations

import re

from .errors import ExpressionParseError, GeneratorUnavailableError
from .gf import FieldElement, FiniteField, make_field
from .poly import Polynomial, constant, x
from .ratfunc import INFINITY, ProjectivePoint, RationalFunction

_FIELD_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")

_TOKEN_RE = re.compile(r"(\d+)|([xt+\-*/^()])")


def parse_field(spec: str) -> FiniteField:
    """Parse 'p' or 'p^n' into the canonical field."""
    m = _FIELD_RE.match(spec)
    if not m:
        raise ExpressionParseError("field spec %r is not of the form p or p^n" % spec)
    p = int(m.group(1))
    n = int(m.group(2)) if m.group(2) else 1
    return make_field(p, n)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExpressionParseError("unexpected character %r" % text[pos], pos)
        if m.group(1) is not None:
            tokens.append(("nat", int(m.group(1)), m.start(1)))
        else:
            tokens.append((m.group(2), None, m.start(2)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FiniteField):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExpressionParseError("expected %r, found %r" % (kind, tok[0]), tok[2])
        return tok

    def parse_poly(self) -> Polynomial:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> Polynomial:
        value = self.parse_factor()
        while self.peek() == "*":
            self.next()
            value = value * self.parse_factor()
        return value

    def parse_factor(self) -> Polynomial:
        value = self.parse_atom()
        if self.peek() == "^":
            self.next()
            tok = self.next()
            if tok[0] != "nat":
                raise ExpressionParseError("exponent must be a nonnegative integer", tok[2])
            value = value**tok[1]
        return value

    def parse_atom(self) -> Polynomial:
        kind, value, pos = self.next()
        if kind == "nat":
            return constant(self.field, value)
        if kind == "x":
            return x(self.field)
        if kind == "t":
            if self.field.n == 1:
                raise GeneratorUnavailableError(
                    "t is only available over extension fields, not %r" % self.field
                )
            return constant(self.field, self.field.gen())
        if kind == "(":
            inner = self.parse_poly()
            self.expect(")")
            return inner
        if kind == "-":
            return -self.parse_factor()
        raise ExpressionParseError("unexpected token %r" % kind, pos)


def parse_polynomial(text: str, field: FiniteField) -> Polynomial:
    parser = _Parser(text, field)
    value = parser.parse_poly()
    parser.expect("end")
    return value


def parse_ratfunc(text: str, field: FiniteField) -> RationalFunction:
    """Parse a rational expression; coefficients reduce mod p, t is the
    field generator, and the result is normalized by the usual factory."""
    parser = _Parser(text, field)
    num = parser.parse_poly()
    den = constant(field, 1)
    if parser.peek() == "/":
        parser.next()
        den = parser.parse_poly()
    parser.expect("end")
    return RationalFunction(num, den)


def parse_element(text: str, field: FiniteField) -> FieldElement:
    """Parse a constant expression (integers and t only) to a field element."""
    value = parse_polynomial(text, field)
    if value.degree > 0:
        raise ExpressionParseError("%r is not a constant" % text)
    return value.coefficient(0)


def parse_point(text: str, field: FiniteField) -> ProjectivePoint:
    """A projective point: 'inf' or a constant expression."""
    if text.strip() == "inf":
        return INFINITY
    return ProjectivePoint(parse_element(text, field))
