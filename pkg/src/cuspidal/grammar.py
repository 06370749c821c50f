"""Shared polynomial text grammar and point syntax.

Terms like ``c*x0^i*x1^j*y0^k*y1^l`` joined by ``+``/``-``; coefficients
are integers or ``a/b`` rationals.  Variable sets: {x0,x1,y0,y1} for
P1xP1 forms, {X0,X1,X2,X3} for P3 / cone forms, {x,y} for hyperelliptic
affine models, {s,t} for binary forms.  Points are colon tuples such as
``((1:0),(0:1))`` or ``(1:2:4:3)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*([+-]|[A-Za-z]\w*|\d+/\d+|\d+|\^|\*)")


def parse_polynomial(text: str, variables) -> dict:
    """Parse into {exponent tuple: Fraction}, exponents ordered as
    ``variables``.  Raises :class:`ParseError` on malformed input."""
    varindex = {v: i for i, v in enumerate(variables)}
    nvars = len(variables)
    pos = 0
    out: dict = {}
    sign = 1
    expecting_term = True
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")

    def take():
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if not m:
            return None
        pos = m.end()
        return m.group(1)

    tokens = []
    while pos < len(text):
        t = take()
        if t is None:
            raise ParseError("bad character at %r" % text[pos:pos + 10])
        tokens.append(t)

    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("trailing sign")
        coeff = Fraction(sign)
        exps = [0] * nvars
        saw_factor = False
        while True:
            t = tokens[i]
            if t in varindex:
                idx = varindex[t]
                e = 1
                if i + 1 < n and tokens[i + 1] == "^":
                    if i + 2 >= n or not tokens[i + 2].isdigit():
                        raise ParseError("bad exponent after %s" % t)
                    e = int(tokens[i + 2])
                    i += 2
                exps[idx] += e
                i += 1
            elif re.fullmatch(r"\d+/\d+", t) or t.isdigit():
                coeff *= Fraction(t)
                i += 1
            else:
                raise ParseError("unexpected token %r" % t)
            saw_factor = True
            if i < n and tokens[i] == "*":
                i += 1
                if i >= n:
                    raise ParseError("trailing '*'")
                continue
            break
        if not saw_factor:
            raise ParseError("empty term")
        key = tuple(exps)
        out[key] = out.get(key, Fraction(0)) + coeff
        if i < n and tokens[i] not in "+-":
            raise ParseError("expected '+' or '-' before %r" % tokens[i])
    return {k: v for k, v in out.items() if v != 0}


def format_polynomial(coeff_map: dict, variables, value_repr=str) -> str:
    """Inverse of :func:`parse_polynomial`; deterministic term order."""
    if not coeff_map:
        return "0"
    items = sorted(coeff_map.items(), key=lambda kv: kv[0], reverse=True)
    parts = []
    for exps, c in items:
        cs = value_repr(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        factors = []
        for v, e in zip(variables, exps):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append("%s^%d" % (v, e))
        if not factors:
            body = cs
        elif cs == "1":
            body = "*".join(factors)
        else:
            body = cs + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def format_univariate(poly, var: str) -> str:
    coeff_map = {}
    for i, c in enumerate(poly.coeffs):
        if not c.is_zero():
            coeff_map[(i,)] = c
    return format_polynomial(coeff_map, (var,), value_repr=repr)


def parse_p1_point(text: str):
    """Parse ``(a:b)`` into a pair of Fractions."""
    m = re.fullmatch(r"\s*\(\s*(-?\d+(?:/\d+)?)\s*:\s*(-?\d+(?:/\d+)?)\s*\)\s*", text)
    if not m:
        raise ParseError("bad P1 point %r" % text)
    return Fraction(m.group(1)), Fraction(m.group(2))


def parse_quadric_point(text: str):
    """Parse ``((a:b),(c:d))`` into two Fraction pairs."""
    m = re.fullmatch(r"\s*\(\s*(\(.*?\))\s*,\s*(\(.*?\))\s*\)\s*", text)
    if not m:
        raise ParseError("bad quadric point %r" % text)
    return parse_p1_point(m.group(1)), parse_p1_point(m.group(2))


def parse_p3_point(text: str):
    """Parse ``(a:b:c:d)`` into four Fractions."""
    m = re.fullmatch(
        r"\s*\(\s*(-?\d+(?:/\d+)?)\s*:\s*(-?\d+(?:/\d+)?)\s*:\s*"
        r"(-?\d+(?:/\d+)?)\s*:\s*(-?\d+(?:/\d+)?)\s*\)\s*", text)
    if not m:
        raise ParseError("bad P3 point %r" % text)
    return tuple(Fraction(m.group(i)) for i in range(1, 5))
