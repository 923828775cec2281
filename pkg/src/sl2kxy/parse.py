"""Text grammar for scalars and polynomials.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' | 'y' | 'sqrt' '(' expr ')' | '(' expr ')'

Implicit multiplication is rejected.  Division is only allowed by nonzero
constants, and ``sqrt`` only of rational constants.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NegativeExponent, NonIntegerExponent, ParseError
from .scalar import QuadExt, Scalar, format_scalar, sqrt_adjoin

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([xy])|(\^|\*|/|\+|-|\(|\)))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("sqrt", "sqrt", start))
        elif m.group(3):
            out.append(("var", m.group(3), start))
        else:
            out.append(("op", m.group(4), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        from .poly import Poly
        self.Poly = Poly
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", self.text, 0)
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return val

    def expr(self):
        tok = self.peek()
        sign = 1
        if tok[1] in ("+", "-"):
            self.take()
            sign = -1 if tok[1] == "-" else 1
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while True:
            tok = self.peek()
            if tok[1] == "*":
                self.take()
                val = val * self.unary()
            elif tok[1] == "/":
                self.take()
                pos = self.peek()[2]
                den = self.unary()
                if not den.is_constant() or den.is_zero():
                    raise ParseError("division only by nonzero constants", self.text, pos)
                val = val.scale(1 / den.constant_term())
            elif tok[0] in ("int", "var", "sqrt") or tok[1] == "(":
                raise ParseError("implicit multiplication is not allowed", self.text, tok[2])
            else:
                return val

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        self.take()
        tok = self.peek()
        if tok[1] == "-":
            raise NegativeExponent("negative exponent", self.text, tok[2])
        if tok[0] != "int":
            raise NonIntegerExponent("exponent must be a non-negative integer literal", self.text, tok[2])
        self.take()
        return base ** int(tok[1])

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        P = self.Poly
        if kind == "int":
            return P.const(Fraction(int(val)))
        if kind == "var":
            return P.x() if val == "x" else P.y()
        if kind == "sqrt":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            c = inner.constant_term() if inner.is_constant() else None
            if c is None or isinstance(c, QuadExt):
                raise ParseError("sqrt takes a rational constant", self.text, pos)
            return P.const(sqrt_adjoin(c)[0])
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse_poly(text: str):
    """Parse a polynomial in ``x`` and ``y``."""
    return _Parser(text).parse()


def parse_scalar(text: str) -> Scalar:
    p = parse_poly(text)
    if not p.is_constant():
        raise ParseError("expected a constant", text, 0)
    return p.constant_term()


def _mono(ex: int, ey: int) -> str:
    parts = []
    if ex:
        parts.append("x" if ex == 1 else f"x^{ex}")
    if ey:
        parts.append("y" if ey == 1 else f"y^{ey}")
    return "*".join(parts)


def format_poly(p) -> str:
    """Canonical text: graded-lex descending, ``x > y``."""
    if p.is_zero():
        return "0"
    out = []
    for (ex, ey), c in p.sorted_terms():
        mono = _mono(ex, ey)
        if isinstance(c, Fraction):
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
        else:
            neg = False
            s = format_scalar(c)
            body = f"{s}*{mono}" if mono else s
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
