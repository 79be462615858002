"""Text syntax for polynomials, multivectors and 1-forms.

Grammar (loosest binding first)::

    expr    := term (('+' | '-') term)*
    term    := product ('/\\' product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := INT | NAME | '(' expr ')'

Names are z0..z3, zb0..zb3, i, d0..d3, db0..db3 and, for 1-forms, dz0..dz3.
``*`` multiplies when one side is a function; ``/`` divides by a nonzero
constant.  Every value is a homogeneous-grade multivector.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .multivector import MVec, wedge
from .poly import Poly
from .scalar import I

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(/\\)|([-+*/^()]))")

VARIABLES = {f"z{k}": k for k in range(4)} | {f"zb{k}": k + 4 for k in range(4)}
PARTIALS = {f"d{k}": k for k in range(4)} | {f"db{k}": k + 4 for k in range(4)}
COVECTORS = {f"dz{k}": k for k in range(4)}


class ParseError(ValueError):
    """Syntax error; ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        col = m.start(m.lastindex) + 1
        kind = ("int", "name", "wedge", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), col))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_covectors: bool):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allow_covectors = allow_covectors
        self.saw_partial = False
        self.saw_covector = False

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, text, col = self.take()
        if text != value or kind == "end":
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {found}", col)

    def parse(self) -> MVec:
        value = self.expr()
        kind, text, col = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", col)
        return value

    def expr(self) -> MVec:
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, col = self.take()
            rhs = self.term()
            value = self._add(value, rhs if op == "+" else rhs * -1, col)
        return value

    def term(self) -> MVec:
        value = self.product()
        while self.peek()[0] == "wedge":
            self.take()
            value = wedge(value, self.product())
        return value

    def product(self) -> MVec:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, col = self.take()
            rhs = self.unary()
            if op == "*":
                if value.grade and rhs.grade:
                    raise ParseError("'*' needs a function on one side; use '/\\' to wedge", col)
                value = wedge(value, rhs)
            else:
                c = _constant(rhs)
                if c is None:
                    raise ParseError("can only divide by a constant", col)
                if not c:
                    raise ParseError("division by zero", col)
                value = value * c.inverse()
        return value

    def unary(self) -> MVec:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return self.unary() * -1
        return self.power()

    def power(self) -> MVec:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            _, _, col = self.take()
            kind, text, ecol = self.take()
            if kind != "int":
                raise ParseError("exponent must be a positive integer", ecol)
            n = int(text)
            if n < 1:
                raise ParseError("exponent must be a positive integer", ecol)
            if base.grade:
                raise ParseError("only functions can be raised to a power", col)
            return MVec.function(base.coefficient(()) ** n)
        return base

    def atom(self) -> MVec:
        kind, text, col = self.take()
        if kind == "int":
            return MVec.function(Poly.const(int(text)))
        if kind == "name":
            if text == "i":
                return MVec.function(Poly.const(I))
            if text in VARIABLES:
                return MVec.function(Poly.var(VARIABLES[text]))
            if text in PARTIALS:
                self.saw_partial = True
                return MVec.partial(PARTIALS[text])
            if text in COVECTORS and self.allow_covectors:
                self.saw_covector = True
                return MVec.partial(COVECTORS[text])
            raise ParseError(f"unknown identifier {text}", col)
        if text == "(":
            value = self.expr()
            self.expect(")")
            return value
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {found}", col)

    @staticmethod
    def _add(a: MVec, b: MVec, col: int) -> MVec:
        if a.grade != b.grade:
            if a.is_zero():
                return b
            if b.is_zero():
                return a
            raise ParseError(f"cannot add grade {a.grade} to grade {b.grade}", col)
        return a + b


def _constant(m: MVec):
    if m.grade:
        return None
    c = m.coefficient(())
    if c.degree() > 0:
        return None
    return c.constant_term()


def parse_mvec(text: str) -> MVec:
    return _Parser(text, allow_covectors=False).parse()


def parse_poly(text: str) -> Poly:
    m = parse_mvec(text)
    if m.grade:
        raise ParseError(f"expected a polynomial, got a {m.grade}-vector", 1)
    return m.coefficient(())


def parse_form_components(text: str) -> Tuple[Poly, Poly, Poly, Poly]:
    """Parse ``sum f_k*dz_k`` into its four coefficients."""
    p = _Parser(text, allow_covectors=True)
    m = p.parse()
    if p.saw_partial:
        raise ParseError("partials are not allowed in a 1-form", 1)
    if m.is_zero():
        return tuple(Poly.const(0) for _ in range(4))
    if m.grade != 1:
        raise ParseError(f"expected a 1-form, got degree {m.grade}", 1)
    return tuple(m.coefficient((k,)) for k in range(4))
