"""Text format for polynomials.

Grammar (whitespace insignificant)::

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := NUMBER | VAR ('^' INT)? | '(' expr ')'
    NUMBER := INT ('/' INT)?
    VAR    := letter (letter|digit|'_')*

NUMBER admits rational literals like ``2/3`` so that monic Groebner basis
elements survive a print/parse round trip.  ``format_polynomial`` emits
this grammar deterministically.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, RingContext


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = int(text[start:i])
            den = None
            if i < n and text[i] == "/":
                j = i + 1
                if j >= n or not text[j].isdigit():
                    raise ParseError("expected digits after '/'", i)
                i = j
                while i < n and text[i].isdigit():
                    i += 1
                den = int(text[j:i])
                if den == 0:
                    raise ParseError("zero denominator", j)
            tokens.append(("num", Fraction(num, den or 1), start))
            continue
        if ch.isalpha():
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("var", text[start:i], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        kind, _, _ = self.peek()
        sign = 1
        if kind in "+-":
            self.advance()
            sign = -1 if kind == "-" else 1
        total = self.term().scale(sign)
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.advance()
                total = total + self.term()
            elif kind == "-":
                self.advance()
                total = total - self.term()
            else:
                return total

    def term(self):
        prod = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            prod = prod * self.factor()
        return prod

    def factor(self):
        kind, value, pos = self.advance()
        if kind == "num":
            return self.ring.constant(value)
        if kind == "var":
            try:
                base = self.ring.var(value)
            except ValueError:
                raise ParseError(f"unknown variable {value!r}", pos) from None
            if self.peek()[0] == "^":
                self.advance()
                ekind, evalue, epos = self.advance()
                if ekind != "num" or evalue.denominator != 1 or evalue < 0:
                    raise ParseError("expected nonnegative integer exponent", epos)
                return base ** int(evalue)
            return base
        if kind == "(":
            inner = self.expr()
            ckind, _, cpos = self.advance()
            if ckind != ")":
                raise ParseError("expected ')'", cpos)
            return inner
        raise ParseError(f"unexpected token {value!r}" if value else "unexpected end of input", pos)


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.  Raises ParseError
    with a character position on malformed input or unknown variables."""
    parser = _Parser(_tokenize(text), ring)
    result = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {value!r}", pos)
    return result


def parse_generators(text: str, ring: RingContext) -> list[Polynomial]:
    """Parse a ';'-separated list of polynomials."""
    parts = [p for p in text.split(";") if p.strip()]
    return [parse_polynomial(p, ring) for p in parts]
