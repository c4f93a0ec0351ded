"""Text parser for polynomial expressions.

Grammar (whitespace insignificant):

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*'? factor)*
    factor  := coeff | variable ('^' integer)?
    coeff   := integer ('/' integer)?

Variables come from the context.  Rational coefficients are accepted over
any field; over F_p the denominator is inverted mod p (error if it reduces
to zero).  Errors carry the character position.
"""

import re

from .fields import FieldError
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([+\-*/^()]))")


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % stripped[0],
                             len(text) - len(stripped))
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ctx):
        self.tokens = _tokenize(text)
        self.ctx = ctx
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        poly = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected token %r" % (value,), pos)
        return poly

    def expr(self):
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        poly = self.term()
        if sign < 0:
            poly = -poly
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                nxt = self.term()
                poly = poly - nxt if value == "-" else poly + nxt
            else:
                return poly

    def term(self):
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            elif kind in ("int", "name") or (kind == "op" and value == "("):
                poly = poly * self.factor()  # implicit multiplication
            else:
                return poly

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "op" and value == "(":
            self.advance()
            poly = self.expr()
            kind, value, pos = self.advance()
            if not (kind == "op" and value == ")"):
                raise ParseError("expected ')'", pos)
            return self._maybe_power(poly)
        if kind == "int":
            return Polynomial.constant(self.ctx, self.coeff())
        if kind == "name":
            self.advance()
            try:
                index = self.ctx.var_index(value)
            except KeyError:
                raise ParseError("unknown variable %r" % value, pos)
            power = self._exponent()
            return Polynomial.variable(self.ctx, index, power)
        raise ParseError("expected a coefficient or variable", pos)

    def _exponent(self):
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.advance()
            if kind != "int":
                raise ParseError("malformed exponent", pos)
            return value
        return 1

    def _maybe_power(self, poly):
        return poly ** self._exponent()

    def coeff(self):
        kind, num, pos = self.advance()
        assert kind == "int"
        kind, value, _ = self.peek()
        if kind == "op" and value == "/":
            # a/b only when followed by another integer
            nxt = self.tokens[self.i + 1]
            if nxt[0] == "int":
                self.advance()
                _, den, dpos = self.advance()
                try:
                    return self.ctx.field.from_fraction(num, den)
                except FieldError as exc:
                    raise ParseError(str(exc), dpos)
        return self.ctx.field.from_int(num)


def parse_poly(text, ctx):
    """Parse a polynomial expression in the given context."""
    return _Parser(text, ctx).parse()
