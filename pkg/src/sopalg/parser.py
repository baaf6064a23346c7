"""Parser for polynomial text.

Grammar (whitespace insignificant)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := INT ['/' INT] | VAR ['^' INT]

The optional leading sign and the ``INT/INT`` rational literal go beyond the
bare grammar so that every printed polynomial parses back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import MAX_EXPONENT, Polynomial, PolyRing


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        if m.group(1) is not None:
            out.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("VAR", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^/":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3))
            out.append((ch, ch, m.start(3)))
        pos = m.end()
    out.append(("EOF", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def poly(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc: dict = {}
        self._add(acc, self.term(), sign)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            self._add(acc, self.term(), sign)
        tok = self.peek()
        if tok[0] != "EOF":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return self.ring.from_dict(acc)

    @staticmethod
    def _add(acc, term, sign):
        c, m = term
        acc[m] = acc.get(m, 0) + sign * c

    def term(self):
        c, m = self.factor()
        while self.peek()[0] == "*":
            self.take()
            c2, m2 = self.factor()
            c = c * c2
            m = tuple(a + b for a, b in zip(m, m2))
            if max(m, default=0) > MAX_EXPONENT:
                raise OverflowError("exponent overflow")
        return c, m

    def factor(self):
        n = self.ring.nvars
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            c = int(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("INT")
                if int(den[1]) == 0:
                    raise PolySyntaxError("zero denominator", den[2])
                c = Fraction(c, int(den[1]))
            return c, (0,) * n
        if tok[0] == "VAR":
            self.take()
            try:
                idx = self.ring.var_index(tok[1])
            except KeyError:
                raise UnknownVariableError(
                    f"unknown variable {tok[1]!r} at position {tok[2]}") from None
            e = 1
            if self.peek()[0] == "^":
                self.take()
                e = int(self.take("INT")[1])
                if e > MAX_EXPONENT:
                    raise OverflowError(f"exponent overflow at position {tok[2]}")
            m = [0] * n
            m[idx] = e
            return 1, tuple(m)
        what = "end of input" if tok[0] == "EOF" else repr(tok[1])
        raise PolySyntaxError(f"expected a number or variable, found {what}", tok[2])


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, ring).poly()
