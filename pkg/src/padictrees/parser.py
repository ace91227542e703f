"""Recursive-descent parser for polynomial expressions in ``n``.

Grammar (whitespace-insensitive)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor (['*'] factor)*
    factor   := primary ('^' uint)*
    primary  := rational | 'n' | '(' expr ')'
    rational := uint ('/' uint)?

Juxtaposition multiplies, so ``3n``, ``3/2(n-9)(3n+1)`` and ``(n-2)*(n+6)``
are all accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import FactoredPolynomial, Polynomial, factor_rational

__all__ = ["ParseError", "parse", "parse_polynomial"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


class ParseError(ValueError):
    """Syntax error; ``position`` is the 0-based offset into the input."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


@dataclass
class _Tok:
    kind: str  # "int", "n", one of "+-*/^()", or "end"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), m.start(1)))
        else:
            ch = m.group(2)
            if ch not in "n+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(2))
            toks.append(_Tok(ch, ch, m.start(2)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str) -> _Tok:
        tok = self.tok
        if tok.kind != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok.kind == "end" else repr(tok.value)
            raise ParseError(f"expected {want}, got {got}", self.text, tok.pos)
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
        total = sign * _product(self.term())
        while self.tok.kind in ("+", "-"):
            op = self.take(self.tok.kind).kind
            rhs = _product(self.term())
            total = total + rhs if op == "+" else total - rhs
        return total

    def term(self) -> list[Polynomial]:
        factors = [self.factor()]
        while True:
            if self.tok.kind == "*":
                self.take("*")
                factors.append(self.factor())
            elif self.tok.kind in ("int", "n", "("):
                factors.append(self.factor())
            else:
                return factors

    def factor(self) -> Polynomial:
        base = self.primary()
        while self.tok.kind == "^":
            self.take("^")
            base = base ** int(self.take("int").value)
        return base

    def primary(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "int":
            self.take("int")
            num = int(tok.value)
            if self.tok.kind == "/":
                slash = self.take("/")
                den = int(self.take("int").value)
                if den == 0:
                    raise ParseError("division by zero", self.text, slash.pos)
                return Polynomial.constant(Fraction(num, den))
            return Polynomial.constant(num)
        if tok.kind == "n":
            self.take("n")
            return Polynomial.var()
        if tok.kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        got = "end of input" if tok.kind == "end" else repr(tok.value)
        raise ParseError(f"unexpected {got}", self.text, tok.pos)

    def top(self) -> FactoredPolynomial:
        # A bare product keeps its explicit factors, which also keeps the
        # rational-root search small; a sum is factored after expansion.
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
        factors = self.term()
        if self.tok.kind == "end":
            out = FactoredPolynomial(Fraction(sign))
            for f in factors:
                out = out * factor_rational(f)
            return out
        total = sign * _product(factors)
        while self.tok.kind in ("+", "-"):
            op = self.take(self.tok.kind).kind
            rhs = _product(self.term())
            total = total + rhs if op == "+" else total - rhs
        self.take("end")
        return factor_rational(total)


def _product(factors: list[Polynomial]) -> Polynomial:
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def parse(text: str) -> FactoredPolynomial:
    """Parse an expression into factored form.

    >>> str(parse("3/2(n-9)(3n+1)"))
    '3/2*(n-9)*(3n+1)'
    """
    return _Parser(text).top()


def parse_polynomial(text: str) -> Polynomial:
    """Parse an expression and return it multiplied out."""
    p = _Parser(text)
    poly = p.expr()
    p.take("end")
    return poly
