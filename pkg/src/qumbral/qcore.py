"""Exact scalar q-combinatorics over the rationals.

Every quantity is a :class:`fractions.Fraction`.  A :class:`QContext` fixes
the base ``q`` (either a rational in the open interval (0, 1) or exactly 1,
the classical limit) and memoises q-numbers, q-factorials and q-binomials.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Union

from .errors import ContextMismatch, UnsupportedOperation

Rational = Fraction
RationalLike = Union[int, Fraction, str]

#: marker accepted by :func:`q_shifted_factorial` for the infinite product
INFINITY = math.inf


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class QContext:
    """The base parameter q together with memo tables.

    Contexts compare equal when their q values are equal, so objects built
    from separately constructed contexts with the same q interoperate.
    """

    __slots__ = ("q", "_lock", "_numbers", "_factorials", "_binomials")

    def __init__(self, q: RationalLike):
        q = as_rational(q)
        if not (0 < q < 1 or q == 1):
            raise ValueError(f"q must satisfy 0 < q < 1 or q = 1, got {q}")
        self.q = q
        self._lock = threading.RLock()
        self._numbers: dict[int, Fraction] = {}
        self._factorials: list[Fraction] = [Fraction(1)]
        self._binomials: dict[tuple[int, int], Fraction] = {}

    @property
    def classical(self) -> bool:
        return self.q == 1

    def __eq__(self, other):
        if not isinstance(other, QContext):
            return NotImplemented
        return self.q == other.q

    def __hash__(self):
        return hash(("QContext", self.q))

    def __repr__(self):
        return f"QContext(q={self.q})"

    def check(self, other: "QContext") -> None:
        if self != other:
            raise ContextMismatch(f"q={self.q} and q={other.q} cannot be mixed")

    def power(self, k: int) -> Fraction:
        return self.q ** k

    # Memoised quantities.  Writers hold the lock; a reader that races a
    # writer at worst recomputes the same exact value.

    def number(self, a: int) -> Fraction:
        value = self._numbers.get(a)
        if value is None:
            value = _q_number_uncached(self.q, a)
            with self._lock:
                self._numbers[a] = value
        return value

    def factorial(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("q-factorial needs n >= 0")
        table = self._factorials
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(table[-1] * self.number(len(table)))
            return table[n]

    def binomial(self, n: int, k: int) -> Fraction:
        if k < 0 or k > n:
            return Fraction(0)
        key = (n, k)
        value = self._binomials.get(key)
        if value is None:
            value = self.factorial(n) / (self.factorial(k) * self.factorial(n - k))
            with self._lock:
                self._binomials[key] = value
        return value


def _q_number_uncached(q: Fraction, a: int) -> Fraction:
    if q == 1:
        return Fraction(a)
    return (1 - q ** a) / (1 - q)


def q_number(ctx: QContext, a: int) -> Fraction:
    """Return ``[a]_q = (1 - q**a) / (1 - q)``, or ``a`` when q = 1."""
    return ctx.number(a)


def q_factorial(ctx: QContext, n: int) -> Fraction:
    return ctx.factorial(n)


def q_double_factorial(ctx: QContext, n: int) -> Fraction:
    """Return ``[2n]_q [2n-2]_q ... [2]_q`` (1 for n = 0)."""
    if n < 0:
        raise ValueError("q-double factorial needs n >= 0")
    result = Fraction(1)
    for j in range(1, n + 1):
        result *= ctx.number(2 * j)
    return result


def q_binomial(ctx: QContext, n: int, k: int) -> Fraction:
    """Gaussian binomial coefficient; zero outside ``0 <= k <= n``."""
    return ctx.binomial(n, k)


def q_multinomial(ctx: QContext, n: int, parts: Iterable[int]) -> Fraction:
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} do not form a composition of {n}")
    result = ctx.factorial(n)
    for p in parts:
        result /= ctx.factorial(p)
    return result


def q_shifted_factorial(ctx: QContext, a: RationalLike, n) -> Fraction:
    """Return ``(a; q)_n``, the product of ``1 - q**j * a`` for ``j < n``."""
    if n == INFINITY:
        raise UnsupportedOperation("(a; q)_inf has no exact rational value")
    if n < 0:
        raise ValueError("q-shifted factorial needs n >= 0")
    a = as_rational(a)
    result = Fraction(1)
    for j in range(n):
        result *= 1 - ctx.power(j) * a
    return result


def compositions(n: int, parts: int):
    """Yield every tuple of ``parts`` nonnegative integers summing to ``n``."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest
