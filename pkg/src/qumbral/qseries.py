"""Truncated Laurent series in t with exact rational coefficients.

A :class:`Series` knows its coefficients for the powers ``t**v .. t**N``,
where ``v`` is the valuation (possibly negative) and ``N`` the truncation.
Everything above ``N`` is unknown, and asking for it raises
:class:`~qumbral.errors.TruncationError` instead of silently returning 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import TruncationError
from .qcore import QContext, RationalLike, as_rational


class Series:
    """Immutable truncated Laurent series ``sum a_k t**k + O(t**(N+1))``.

    The zero series has no stored coefficients and, by convention, a
    valuation of ``N + 1``: every known coefficient vanishes.
    """

    __slots__ = ("ctx", "valuation", "coeffs", "truncation")

    def __init__(
        self,
        ctx: QContext,
        coeffs: Iterable[RationalLike],
        truncation: int,
        start: int = 0,
    ):
        values = [as_rational(c) for c in coeffs]
        if len(values) > truncation - start + 1:
            raise ValueError(
                f"{len(values)} coefficients from t^{start} exceed truncation {truncation}"
            )
        values += [Fraction(0)] * (truncation - start + 1 - len(values))
        lead = 0
        while lead < len(values) and values[lead] == 0:
            lead += 1
        self.ctx = ctx
        self.truncation = truncation
        if lead == len(values):
            self.valuation = truncation + 1
            self.coeffs: tuple[Fraction, ...] = ()
        else:
            self.valuation = start + lead
            self.coeffs = tuple(values[lead:])

    # -- construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, ctx: QContext, k: int, truncation: int, coeff: RationalLike = 1) -> "Series":
        if k > truncation:
            return cls(ctx, [], truncation)
        return cls(ctx, [coeff], truncation, start=k)

    @classmethod
    def one(cls, ctx: QContext, truncation: int) -> "Series":
        return cls.monomial(ctx, 0, truncation)

    @classmethod
    def zero(cls, ctx: QContext, truncation: int) -> "Series":
        return cls(ctx, [], truncation)

    # -- access ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Fraction:
        if n > self.truncation:
            raise TruncationError(
                f"coefficient of t^{n} requested but series is only known through t^{self.truncation}"
            )
        if n < self.valuation:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    __getitem__ = coeff

    def terms(self):
        """Yield ``(power, coefficient)`` for every nonzero known term."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.valuation + i, c

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.truncation == other.truncation
            and self.valuation == other.valuation
            and self._trimmed() == other._trimmed()
        )

    def __hash__(self):
        return hash((self.ctx.q, self.truncation, self.valuation, self._trimmed()))

    def _trimmed(self) -> tuple[Fraction, ...]:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def agrees_with(self, other: "Series", through: Optional[int] = None) -> bool:
        """True when both series have identical coefficients up to ``through``.

        ``through`` defaults to the smaller truncation; requesting more than
        either series knows raises :class:`TruncationError`.
        """
        self.ctx.check(other.ctx)
        if through is None:
            through = min(self.truncation, other.truncation)
        low = min(self.valuation, other.valuation)
        return all(self.coeff(k) == other.coeff(k) for k in range(low, through + 1))

    def __str__(self):
        from .formatting import format_series

        return format_series(self)

    def __repr__(self):
        return f"Series({self})"

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            self.ctx.check(other.ctx)
            return other
        c = as_rational(other)
        return Series(self.ctx, [c], self.truncation)

    def __add__(self, other) -> "Series":
        other = self._coerce(other)
        n = min(self.truncation, other.truncation)
        low = min(self.valuation, other.valuation)
        if low > n:
            return Series.zero(self.ctx, n)
        return Series(
            self.ctx,
            [self.coeff(k) + other.coeff(k) for k in range(low, n + 1)],
            n,
            start=low,
        )

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return self.scalar(-1)

    def __sub__(self, other) -> "Series":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Series":
        return self._coerce(other) - self

    def scalar(self, c: RationalLike) -> "Series":
        c = as_rational(c)
        return Series(self.ctx, [c * a for a in self.coeffs], self.truncation, start=self.valuation)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self.scalar(other)
        self.ctx.check(other.ctx)
        n = min(self.truncation + other.valuation, other.truncation + self.valuation)
        if self.is_zero or other.is_zero:
            return Series.zero(self.ctx, n)
        low = self.valuation + other.valuation
        out = [Fraction(0)] * max(0, n - low + 1)
        a, b = self.coeffs, other.coeffs
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(min(len(b), len(out) - i)):
                out[i + j] += ai * b[j]
        return Series(self.ctx, out, n, start=low)

    def __rmul__(self, other) -> "Series":
        return self.scalar(other)

    def __pow__(self, m: int) -> "Series":
        if m < 0:
            return self.invert() ** (-m)
        result = Series.one(self.ctx, self.truncation - self.valuation)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __truediv__(self, other) -> "Series":
        if isinstance(other, Series):
            return self * other.invert()
        return self.scalar(1 / as_rational(other))

    def invert(self) -> "Series":
        """Multiplicative inverse, solving ``f * g = 1`` term by term."""
        if self.is_zero:
            raise ZeroDivisionError("the zero series has no inverse")
        v = self.valuation
        rel = self.truncation - v
        u = self.coeffs
        inv_lead = 1 / u[0]
        out = [inv_lead]
        for k in range(1, rel + 1):
            acc = Fraction(0)
            for j in range(1, min(k, len(u) - 1) + 1):
                acc += u[j] * out[k - j]
            out.append(-acc * inv_lead)
        return Series(self.ctx, out, rel - v, start=-v)

    def shift(self, k: int) -> "Series":
        """Multiply by ``t**k`` (k may be negative)."""
        return Series(self.ctx, self.coeffs, self.truncation + k, start=self.valuation + k)

    def truncate(self, n: int) -> "Series":
        if n > self.truncation:
            raise TruncationError(f"cannot extend truncation from {self.truncation} to {n}")
        keep = [self.coeff(k) for k in range(self.valuation, n + 1)]
        return Series(self.ctx, keep, n, start=min(self.valuation, n + 1))

    def q_derivative(self) -> "Series":
        """Apply ``D_q`` termwise: ``a_n t**n -> [n]_q a_n t**(n-1)``."""
        ctx = self.ctx
        out = [ctx.number(self.valuation + i) * a for i, a in enumerate(self.coeffs)]
        return Series(ctx, out, self.truncation - 1, start=self.valuation - 1)

    def scale(self, c: RationalLike) -> "Series":
        """Return ``f(c t)``."""
        c = as_rational(c)
        if c == 0:
            if self.valuation < 0:
                raise ZeroDivisionError("cannot evaluate a series with negative powers at t = 0")
            return Series(self.ctx, [self.coeff(0)], self.truncation)
        return Series(
            self.ctx,
            [a * c ** (self.valuation + i) for i, a in enumerate(self.coeffs)],
            self.truncation,
            start=self.valuation,
        )


@dataclass(frozen=True)
class Classification:
    valuation: Optional[int]
    is_delta: bool
    is_invertible: bool
    is_zero: bool = False


def classify(f: Series) -> Classification:
    """Order of a series and whether it is invertible (order 0) or delta (order 1)."""
    if f.is_zero:
        return Classification(None, False, False, is_zero=True)
    v = f.valuation
    return Classification(v, is_delta=v == 1, is_invertible=v == 0)


def series_add(f: Series, g: Series) -> Series:
    return f + g


def series_mul(f: Series, g: Series) -> Series:
    return f * g


def series_scalar(c: RationalLike, f: Series) -> Series:
    return f.scalar(c)


def series_invert(f: Series) -> Series:
    return f.invert()


def q_derivative_series(f: Series) -> Series:
    return f.q_derivative()


def scale_argument(f: Series, c: RationalLike) -> Series:
    return f.scale(c)


def e_q_series(ctx: QContext, N: int) -> Series:
    """The q-exponential ``sum t**n / [n]_q!`` through ``t**N``."""
    if N < 0:
        raise ValueError("truncation must be >= 0")
    return Series(ctx, [1 / ctx.factorial(n) for n in range(N + 1)], N)


def series_from_list(ctx: QContext, coeffs: Sequence[RationalLike], start: int = 0) -> Series:
    """Series whose known coefficients are exactly ``coeffs`` (from ``t**start``)."""
    return Series(ctx, coeffs, start + len(coeffs) - 1, start=start)
