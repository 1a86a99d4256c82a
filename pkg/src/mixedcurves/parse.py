"""Text grammar for mixed polynomials.

    expr    := ('-')? term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := base ('^' uint)?
    base    := var | '~'var | 'conj(' var ')' | literal | '(' expr ')' | 'i'
    literal := int ('/' uint)?

Whitespace is insignificant.  `~z` and `conj(z)` both denote the conjugate
of a declared variable; `~` is what the printer emits.  `i` is the imaginary
unit unless a variable of that name is declared.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .gaussian import GaussianRational
from .mixedpoly import MixedPolynomial
from .realpoly import RealPolynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_SYMBOLS = set("+-*^/()~")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            out.append(("sym", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect_sym(self, s: str):
        kind, val, at = self.next()
        if kind != "sym" or val != s:
            raise ParseError(f"expected {s!r}", at)

    def var_poly(self, name: str, at: int, conj: bool) -> MixedPolynomial:
        if name not in self.variables:
            raise ParseError(f"undeclared symbol {name!r}", at)
        i = self.variables.index(name)
        nu = [0] * len(self.variables)
        mu = [0] * len(self.variables)
        (mu if conj else nu)[i] = 1
        return MixedPolynomial(self.variables, {(tuple(nu), tuple(mu)): GaussianRational(1)})

    def parse_expr(self) -> MixedPolynomial:
        kind, val, _ = self.peek()
        negate = False
        if kind == "sym" and val == "-":
            self.next()
            negate = True
        acc = self.parse_term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.next()
                t = self.parse_term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def parse_term(self) -> MixedPolynomial:
        acc = self.parse_factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val == "*":
                self.next()
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> MixedPolynomial:
        base = self.parse_base()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.next()
            kind, val, at = self.next()
            if kind != "int":
                raise ParseError("expected integer exponent", at)
            return base ** int(val)
        return base

    def parse_base(self) -> MixedPolynomial:
        kind, val, at = self.next()
        if kind == "int":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "sym" and v2 == "/":
                k3, v3, at3 = self.tokens[self.pos + 1]
                if k3 == "int":
                    self.pos += 2
                    den = int(v3)
                    if den == 0:
                        raise ParseError("zero denominator", at3)
                    return MixedPolynomial.const(self.variables, Fraction(num, den))
            return MixedPolynomial.const(self.variables, num)
        if kind == "sym" and val == "(":
            inner = self.parse_expr()
            self.expect_sym(")")
            return inner
        if kind == "sym" and val == "~":
            k2, name, at2 = self.next()
            if k2 != "name":
                raise ParseError("expected variable after '~'", at2)
            return self.var_poly(name, at2, conj=True)
        if kind == "name":
            if val == "conj" and self.peek()[0] == "sym" and self.peek()[1] == "(":
                self.next()
                k2, name, at2 = self.next()
                if k2 != "name":
                    raise ParseError("expected variable inside conj()", at2)
                self.expect_sym(")")
                return self.var_poly(name, at2, conj=True)
            if val == "i" and "i" not in self.variables:
                return MixedPolynomial.const(self.variables, GaussianRational(0, 1))
            return self.var_poly(val, at, conj=False)
        raise ParseError(f"unexpected token {val!r}", at)


def parse_mixed(text: str, variables: Sequence[str]) -> MixedPolynomial:
    """Parse the grammar above into a MixedPolynomial over the declared variables."""
    p = _Parser(text, variables)
    out = p.parse_expr()
    kind, val, at = p.peek()
    if kind != "end":
        raise ParseError(f"trailing input {val!r}", at)
    return out


def parse_real(text: str, variables: Sequence[str]) -> RealPolynomial:
    """Parse a conjugate-free, real-coefficient polynomial as a RealPolynomial."""
    m = parse_mixed(text, variables)
    out = {}
    for (nu, mu), c in m.terms.items():
        if any(mu):
            raise ParseError("conjugate variables are not allowed in a real polynomial", 0)
        if c.im != 0:
            raise ParseError("imaginary coefficients are not allowed in a real polynomial", 0)
        out[nu] = c.re
    return RealPolynomial(variables, out)
