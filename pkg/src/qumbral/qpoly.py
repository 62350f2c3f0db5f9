"""Exact polynomials in x, the q-derivative and the Jackson integral."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .qcore import QContext, RationalLike, as_rational


class Poly:
    """Immutable polynomial ``c_0 + c_1 x + ... + c_d x**d`` over the rationals.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: QContext, coeffs: Iterable[RationalLike] = ()):
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.ctx = ctx
        self.coeffs: tuple[Fraction, ...] = tuple(values)

    @classmethod
    def monomial(cls, ctx: QContext, n: int, coeff: RationalLike = 1) -> "Poly":
        return cls(ctx, [0] * n + [coeff])

    @classmethod
    def constant(cls, ctx: QContext, c: RationalLike) -> "Poly":
        return cls(ctx, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.q, self.coeffs))

    def __str__(self):
        from .formatting import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self.ctx.check(other.ctx)
            return other
        return Poly.constant(self.ctx, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = as_rational(other)
            return Poly(self.ctx, [c * a for a in self.coeffs])
        self.ctx.check(other.ctx)
        if self.is_zero or other.is_zero:
            return Poly(self.ctx)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(self.ctx, out)

    def __rmul__(self, other) -> "Poly":
        return self * other

    def __call__(self, c: RationalLike) -> Fraction:
        return eval_poly(self, c)

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        if self.is_zero:
            return self
        return Poly(self.ctx, [0] * k + list(self.coeffs))

    def scale_argument(self, c: RationalLike) -> "Poly":
        """Return ``p(c x)``."""
        c = as_rational(c)
        return Poly(self.ctx, [a * c**k for k, a in enumerate(self.coeffs)])

    def q_derivative(self) -> "Poly":
        return q_derivative_poly(self)


def eval_poly(p: Poly, c: RationalLike) -> Fraction:
    """Horner evaluation at an exact rational point."""
    c = as_rational(c)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * c + a
    return acc


def q_derivative_poly(p: Poly) -> Poly:
    """``x**n -> [n]_q x**(n-1)``; constants go to zero."""
    ctx = p.ctx
    return Poly(ctx, [ctx.number(k) * a for k, a in enumerate(p.coeffs)][1:])


def q_derivative_power(p: Poly, k: int) -> Poly:
    for _ in range(k):
        p = q_derivative_poly(p)
    return p


def jackson_antiderivative(p: Poly) -> Poly:
    """The Jackson integral from 0 to x: ``x**k -> x**(k+1) / [k+1]_q``."""
    ctx = p.ctx
    return Poly(ctx, [Fraction(0)] + [a / ctx.number(k + 1) for k, a in enumerate(p.coeffs)])


def jackson_integral(p: Poly, a: RationalLike, b: RationalLike) -> Fraction:
    """Definite Jackson integral of ``p`` over ``[a, b]`` in closed form."""
    F = jackson_antiderivative(p)
    return eval_poly(F, b) - eval_poly(F, a)


def jackson_partial_sum(p: Poly, x: RationalLike, terms: int) -> Fraction:
    """First ``terms`` summands of the Jackson series ``(1-q) sum x q^j p(x q^j)``.

    Only meaningful for ``0 < q < 1``; exposed as an independent check of
    the closed form.
    """
    ctx = p.ctx
    if ctx.classical:
        raise ValueError("the Jackson series degenerates at q = 1")
    x = as_rational(x)
    q = ctx.q
    total = Fraction(0)
    for j in range(terms):
        point = x * q**j
        total += point * eval_poly(p, point)
    return (1 - q) * total


def q_add_power(ctx: QContext, n: int, y: RationalLike) -> Poly:
    """The q-analogue ``(x + y)_q^n`` as a polynomial in x for fixed ``y``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    y = as_rational(y)
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        out[n - k] = ctx.binomial(n, k) * ctx.power(k * (k - 1) // 2) * y**k
    return Poly(ctx, out)


def x_minus_one_power(ctx: QContext, n: int) -> Poly:
    return q_add_power(ctx, n, -1)
