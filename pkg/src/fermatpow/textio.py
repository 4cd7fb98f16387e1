"""Canonical text grammar for polynomials and cyclotomic numbers.

Round-trips are bit-exact: ``parse_poly(render_poly(p), p.ring) == p``.
Terms are joined by ``+``/``-``; a term is ``coef*mono``, ``mono`` or
``coef``; a monomial is ``x^a*y^b*z^c`` with unit exponents omissible;
coefficients are ``p/q`` rationals or cyclotomic expressions in ``z_n``
(parenthesized when compound).  Whitespace is insignificant.
"""

from __future__ import annotations

import re
from math import gcd

from .cyclo import CycloField, CycloNumber
from .fields import QQ, rat, rat_parts
from .poly import GREVLEX, Poly, PolyRing


class ParseError(ValueError):
    pass


# -- rendering ----------------------------------------------------------


def render_rational(q) -> str:
    num, den = rat_parts(q)
    return str(num) if den == 1 else f"{num}/{den}"


def render_cyclo(value: CycloNumber) -> str:
    """Cyclotomic number as a polynomial in z_n, e.g. ``1/2*z_3 - 1``."""
    q = value.as_rational()
    if q is not None:
        return render_rational(q)
    var = f"z_{value.conductor}"
    parts = []
    for k in range(len(value.coeffs) - 1, -1, -1):
        c = value.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = render_rational(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{render_rational(abs(c))}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


def _coeff_text(c) -> tuple[bool, str]:
    """(negative, text) for a coefficient; compound cyclotomic values are
    parenthesized and treated as positive."""
    if isinstance(c, CycloNumber):
        q = c.as_rational()
        if q is None:
            s = render_cyclo(c)
            if any(op in s[1:] for op in "+-*"):
                return False, f"({s})"
            if s.startswith("-"):
                return True, s[1:]
            return False, s
        c = q
    if c < 0:
        return True, render_rational(-c)
    return False, render_rational(c)


def render_poly(p: Poly, order=GREVLEX) -> str:
    if p.is_zero():
        return "0"
    variables = p.ring.variables
    parts = []
    for exps, coeff in p.sorted_terms(order):
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exps) if e
        )
        negative, ctext = _coeff_text(coeff)
        if not mono:
            body = ctext
        elif ctext == "1":
            body = mono
        else:
            body = f"{ctext}*{mono}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


# -- parsing ------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^()]))"
)
_ZETA = re.compile(r"^z_(\d+)$")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        pos = m.end()
        if m.group("rat"):
            tokens.append(("rat", m.group("rat").replace(" ", "")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: PolyRing):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def parse_expr(self) -> Poly:
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.parse_term()
        if negate:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.parse_term()
                acc = acc - rhs if val == "-" else acc + rhs
            else:
                return acc

    def parse_term(self) -> Poly:
        acc = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> Poly:
        base = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "rat" or "/" in val:
                raise ParseError("exponent must be a non-negative integer")
            return base ** int(val)
        return base

    def parse_atom(self) -> Poly:
        kind, val = self.take()
        if kind == "rat":
            if "/" in val:
                num, den = val.split("/")
                return self.ring.one * rat(int(num), int(den))
            return self.ring.one * rat(int(val))
        if kind == "name":
            zm = _ZETA.match(val)
            if zm:
                conductor = int(zm.group(1))
                field = self.ring.field
                if not isinstance(field, CycloField):
                    raise ParseError(
                        f"cyclotomic literal {val} in a rational-coefficient context"
                    )
                return self.ring.one * field.coerce(CycloField(conductor).zeta)
            if val in self.ring.variables:
                return self.ring.var(val)
            raise ParseError(f"unknown variable {val!r}")
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and val == "-":
            return -self.parse_atom()
        raise ParseError(f"unexpected token {val!r}")


def _conductors_in(tokens) -> list[int]:
    out = []
    for kind, val in tokens:
        if kind == "name":
            zm = _ZETA.match(val)
            if zm:
                out.append(int(zm.group(1)))
    return out


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse a polynomial in the given ring; z_n literals require (or induce)
    a cyclotomic coefficient field."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    conductors = _conductors_in(tokens)
    work_ring = ring
    if conductors and not isinstance(ring.field, CycloField):
        conductor = 1
        for c in conductors:
            conductor = conductor * c // gcd(conductor, c)
        work_ring = PolyRing(ring.variables, CycloField(conductor))
    parser = _Parser(tokens, work_ring)
    result = parser.parse_expr()
    if parser.pos != len(tokens):
        raise ParseError(f"trailing tokens starting at {parser.tokens[parser.pos]}")
    return result


def parse_cyclo(text: str, conductor: int | None = None) -> CycloNumber:
    """Parse a cyclotomic scalar (same grammar, no ring variables)."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty coordinate")
    found = _conductors_in(tokens)
    if conductor is None:
        conductor = 1
        for c in found:
            conductor = conductor * c // gcd(conductor, c)
    ring = PolyRing((), CycloField(conductor))
    parser = _Parser(tokens, ring)
    result = parser.parse_expr()
    if parser.pos != len(tokens):
        raise ParseError(f"trailing tokens starting at {parser.tokens[parser.pos]}")
    value = result.terms.get((), None)
    if value is None:
        return CycloField(conductor).zero
    return CycloField(conductor).coerce(value)
