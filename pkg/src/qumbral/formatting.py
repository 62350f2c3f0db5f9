"""Text formats for rationals, series and polynomials, plus their parsers.

Rationals print as ``p/q`` in lowest terms or as a bare integer.  Parsing is
deliberately strict: decimals and exponents are rejected so that every
accepted token denotes exactly the rational it spells.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .qpoly import Poly
    from .qseries import Series

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(r: Fraction) -> str:
    return str(Fraction(r))


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_rational_list(text: str) -> list[Fraction]:
    items = [s for s in text.split(",")]
    if not text.strip():
        raise ValueError("empty coefficient list")
    return [parse_rational(s) for s in items]


def _join_terms(terms: Sequence[tuple[Fraction, str]]) -> str:
    out = []
    for c, mono in terms:
        sign = "-" if c < 0 else "+"
        body = format_rational(abs(c))
        if mono:
            body = f"{body}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_series(f: "Series") -> str:
    terms = []
    for k, c in f.terms():
        terms.append((c, "" if k == 0 else f"t^{k}"))
    head = _join_terms(terms) if terms else "0"
    return f"{head} + O(t^{f.truncation + 1})"


def format_poly(p: "Poly") -> str:
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c:
            terms.append((c, "" if k == 0 else f"x^{k}"))
    return _join_terms(terms) if terms else "0"


def poly_to_json(p: "Poly") -> list[str]:
    return [format_rational(c) for c in p.coeffs]
