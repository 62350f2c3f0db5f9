"""Series in t acting on polynomials in x, as functionals and as operators.

A series ``f(t) = sum f_k t**k`` pairs with ``x**n`` as ``[n]_q! f_n`` and
acts on ``x**n`` as ``sum_k f_k [n]_q!/[n-k]_q! x**(n-k)``.  The same rule
covers negative powers: ``t**-1`` sends ``x**n`` to ``x**(n+1)/[n+1]_q``,
the right inverse of the q-derivative.  Negative powers never contribute to
a pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import TruncationError
from .qcore import compositions
from .qpoly import Poly
from .qseries import Series


@dataclass(frozen=True)
class Functional:
    series: Series

    @property
    def ctx(self):
        return self.series.ctx


FunctionalLike = Union[Functional, Series]


def _series(f: FunctionalLike) -> Series:
    return f.series if isinstance(f, Functional) else f


def _require(f: Series, n: int) -> None:
    if f.truncation < n:
        raise TruncationError(
            f"pairing against degree {n} needs the series through t^{n}, "
            f"have t^{f.truncation}"
        )


def pair_monomial(f: FunctionalLike, n: int) -> Fraction:
    """``<f | x**n>``."""
    f = _series(f)
    _require(f, n)
    return f.ctx.factorial(n) * f.coeff(n)


def apply(f: FunctionalLike, p: Poly) -> Fraction:
    """The pairing ``<f(t) | p(x)>``."""
    f = _series(f)
    f.ctx.check(p.ctx)
    _require(f, p.degree)
    fact = f.ctx.factorial
    total = Fraction(0)
    for n, c in enumerate(p.coeffs):
        if c:
            total += c * fact(n) * f.coeff(n)
    return total


def operator_apply(f: FunctionalLike, p: Poly) -> Poly:
    """The action ``f(t) p(x)`` of a (Laurent) series as an operator."""
    f = _series(f)
    ctx = f.ctx
    ctx.check(p.ctx)
    _require(f, p.degree)
    if p.is_zero or f.is_zero:
        return Poly(ctx)
    fact = ctx.factorial
    top = p.degree - min(f.valuation, 0)
    out = [Fraction(0)] * (top + 1)
    for n, c in enumerate(p.coeffs):
        if not c:
            continue
        for k in range(f.valuation, n + 1):
            a = f.coeff(k)
            if a:
                out[n - k] += c * a * fact(n) / fact(n - k)
    return Poly(ctx, out)


def adjoint_sides(f: FunctionalLike, g: FunctionalLike, p: Poly) -> tuple[Fraction, Fraction]:
    f, g = _series(f), _series(g)
    return apply(f * g, p), apply(f, operator_apply(g, p))


def check_adjoint(f: FunctionalLike, g: FunctionalLike, p: Poly) -> bool:
    """``<f g | p> == <f | g p>``."""
    lhs, rhs = adjoint_sides(f, g, p)
    return lhs == rhs


def convolution_sides(f: FunctionalLike, g: FunctionalLike, n: int) -> tuple[Fraction, Fraction]:
    f, g = _series(f), _series(g)
    ctx = f.ctx
    lhs = pair_monomial(f * g, n)
    rhs = sum(
        (ctx.binomial(n, k) * pair_monomial(f, k) * pair_monomial(g, n - k) for k in range(n + 1)),
        Fraction(0),
    )
    return lhs, rhs


def check_pairing_convolution(f: FunctionalLike, g: FunctionalLike, n: int) -> bool:
    lhs, rhs = convolution_sides(f, g, n)
    return lhs == rhs


def multinomial_sides(fs: Sequence[FunctionalLike], n: int) -> tuple[Fraction, Fraction]:
    fs = [_series(f) for f in fs]
    if not fs:
        raise ValueError("need at least one functional")
    ctx = fs[0].ctx
    product = fs[0]
    for f in fs[1:]:
        product = product * f
    lhs = pair_monomial(product, n)
    pairings = [[pair_monomial(f, i) for i in range(n + 1)] for f in fs]
    rhs = Fraction(0)
    for parts in compositions(n, len(fs)):
        term = ctx.factorial(n)
        for row, i in zip(pairings, parts):
            term *= row[i] / ctx.factorial(i)
        rhs += term
    return lhs, rhs


def check_pairing_multinomial(fs: Sequence[FunctionalLike], n: int) -> bool:
    lhs, rhs = multinomial_sides(fs, n)
    return lhs == rhs


def expand_functional(f: FunctionalLike, N: int) -> Series:
    """Rebuild ``f`` through ``t**N`` from its pairings with ``x**k``."""
    f = _series(f)
    ctx = f.ctx
    return Series(ctx, [pair_monomial(f, k) / ctx.factorial(k) for k in range(N + 1)], N)


def expand_polynomial(p: Poly) -> Poly:
    """Rebuild ``p`` from the pairings ``<t**k | p>``."""
    ctx = p.ctx
    d = max(p.degree, 0)
    return Poly(
        ctx,
        [apply(Series.monomial(ctx, k, d), p) / ctx.factorial(k) for k in range(p.degree + 1)],
    )
