"""q-Appell families built from their determining series.

A family is fixed by its determining series ``A(t)``; its numbers are
``A_n = [n]_q! [t^n] A(t)`` and its polynomials come from
``A(t) e_q(x t) = sum A_n(x) t^n / [n]_q!``.  The reciprocal ``g = 1/A``
is only formed when a pairing needs it.  For Genocchi-type families it is
a Laurent series.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import ConsistencyError, NonOrthonormalFamily
from .qcore import QContext, RationalLike
from .qpoly import Poly, q_derivative_poly
from .qseries import Series, e_q_series
from .umbral import apply, operator_apply, pair_monomial
from .verdict import Audit, AuditVerdict

Builder = Callable[[QContext, int], Series]


def at_least(make: Callable[[int], Series], need: int) -> Series:
    """Call ``make(N)`` with growing N until the result is known through ``t**need``."""
    N = max(need, 0)
    while True:
        s = make(N)
        if s.truncation >= need:
            return s
        N += need - s.truncation


def bernoulli_series(ctx: QContext, N: int) -> Series:
    """``t / (e_q(t) - 1)`` through ``t**N``."""
    reduced = (e_q_series(ctx, N + 1) - 1).shift(-1)
    return reduced.invert()


def euler_series(ctx: QContext, N: int) -> Series:
    """``2 / (e_q(t) + 1)`` through ``t**N``."""
    return (e_q_series(ctx, N) + 1).invert().scalar(2)


def genocchi_order_series(m: int) -> Builder:
    """Builder for ``(2t / (e_q(t) + 1))**m``."""

    def build(ctx: QContext, N: int) -> Series:
        if N < m:
            return Series.zero(ctx, N)
        return (euler_series(ctx, N - m) ** m).shift(m)

    return build


@dataclass(eq=False)
class AppellFamily:
    name: str
    ctx: QContext
    builder: Builder = field(repr=False)
    det_valuation: int = 0
    order: int = 1
    _numbers: list = field(default_factory=list, repr=False)
    _polys: dict = field(default_factory=dict, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, repr=False)

    def det_series(self, N: int) -> Series:
        s = self.builder(self.ctx, N)
        if s.truncation != N:
            raise ConsistencyError(f"{self.name} builder returned truncation {s.truncation} for {N}")
        return s

    def g_series(self, N: int) -> Series:
        """``g = 1 / A`` known at least through ``t**N``."""
        v = self.det_valuation
        return at_least(lambda M: self.det_series(M + 2 * v).invert(), N)

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("index must be >= 0")
        cache = self._numbers
        if n < len(cache):
            return cache[n]
        with self._lock:
            if n >= len(cache):
                N = max(n, 2 * len(cache), 8)
                s = self.det_series(N)
                fresh = [self.ctx.factorial(k) * s.coeff(k) for k in range(N + 1)]
                if fresh[: len(cache)] != cache:
                    raise ConsistencyError(f"{self.name}: longer series changed known numbers")
                cache[:] = fresh
            return cache[n]

    def polynomial(self, n: int) -> Poly:
        poly = self._polys.get(n)
        if poly is None:
            poly = _build_polynomial(self, n)
            with self._lock:
                self._polys[n] = poly
        return poly


def _build_polynomial(fam: AppellFamily, n: int) -> Poly:
    ctx = fam.ctx
    convolution = Poly(ctx, [ctx.binomial(n, k) * fam.number(n - k) for k in range(n + 1)])
    via_operator = operator_apply(fam.det_series(n), Poly.monomial(ctx, n))
    if convolution != via_operator:
        raise ConsistencyError(
            f"{fam.name} polynomial {n}: convolution {convolution} != operator {via_operator}"
        )
    return convolution


def make_bernoulli(ctx: QContext) -> AppellFamily:
    return AppellFamily("bernoulli", ctx, bernoulli_series, 0)


def make_euler(ctx: QContext) -> AppellFamily:
    return AppellFamily("euler", ctx, euler_series, 0)


def make_genocchi(ctx: QContext) -> AppellFamily:
    return AppellFamily("genocchi", ctx, genocchi_order_series(1), 1)


def make_genocchi_order(ctx: QContext, m: int) -> AppellFamily:
    if m < 1:
        raise ValueError("order must be >= 1")
    if m == 1:
        return make_genocchi(ctx)
    return AppellFamily(f"genocchi^{m}", ctx, genocchi_order_series(m), m, order=m)


_FAMILY = re.compile(r"^(bernoulli|euler|genocchi)(?:\^(\d+))?$")


def make_family(label: str, ctx: QContext) -> AppellFamily:
    """Build a family from a name such as ``euler`` or ``genocchi^3``."""
    m = _FAMILY.match(label.strip().lower())
    if not m or (m.group(2) and m.group(1) != "genocchi"):
        raise ValueError(f"unknown family {label!r}")
    name, order = m.group(1), m.group(2)
    if name == "bernoulli":
        return make_bernoulli(ctx)
    if name == "euler":
        return make_euler(ctx)
    return make_genocchi_order(ctx, int(order) if order else 1)


def numbers(fam: AppellFamily, n: int) -> Fraction:
    return fam.number(n)


def polynomial(fam: AppellFamily, n: int) -> Poly:
    return fam.polynomial(n)


def polynomial_from_inverse(fam: AppellFamily, n: int) -> tuple[Poly, Poly]:
    """Two further constructions of ``A_n`` through ``1/g``.

    Returns the pairing form ``sum [n,k] <1/g | x^(n-k)> x^k`` and the
    operator form ``(1/g)(t) x^n``, with ``1/g`` obtained by inverting ``g``
    rather than by reusing the determining series.
    """
    ctx = fam.ctx
    inv_g = at_least(lambda M: fam.g_series(M).invert(), n)
    by_pairing = Poly(
        ctx, [ctx.binomial(n, k) * pair_monomial(inv_g, n - k) for k in range(n + 1)]
    )
    by_operator = operator_apply(inv_g, Poly.monomial(ctx, n))
    return by_pairing, by_operator


def check_derivative_property(fam: AppellFamily, n: int, audit: Audit | None = None) -> AuditVerdict:
    """``D_q A_n = [n]_q A_(n-1)`` for one index."""
    if n < 1:
        raise ValueError("n must be >= 1")
    own = audit is None
    audit = audit or Audit("appell-derivative")
    lhs = q_derivative_poly(fam.polynomial(n))
    rhs = fam.polynomial(n - 1) * fam.ctx.number(n)
    audit.record(fam.ctx, lhs, rhs, variant=None if own else fam.name, n=n, m=fam.order)
    return audit.verdict()


def sheffer_pairing(fam: AppellFamily, n: int, k: int) -> Fraction:
    """``<g(t) t^k | A_n(x)>``."""
    p = fam.polynomial(n)
    weighted = at_least(lambda M: fam.g_series(M).shift(k), max(p.degree, 0))
    return apply(weighted, p)


def _pairing_coefficients(fam: AppellFamily, p: Poly, indices) -> list[Fraction]:
    ctx = fam.ctx
    d = max(p.degree, 0)
    return [
        apply(at_least(lambda M, k=k: fam.g_series(M).shift(k), d), p) / ctx.factorial(k)
        for k in indices
    ]


def expansion_sides(fam: AppellFamily, p: Poly, indices=None) -> tuple[list[Fraction], Poly]:
    """Coefficients ``<g t^k | p> / [k]_q!`` and the polynomial they rebuild.

    ``indices`` defaults to ``0 .. deg p``.
    """
    if indices is None:
        indices = range(p.degree + 1)
    indices = list(indices)
    coeffs = _pairing_coefficients(fam, p, indices)
    rebuilt = Poly(fam.ctx)
    for k, c in zip(indices, coeffs):
        if c:
            rebuilt = rebuilt + fam.polynomial(k) * c
    return coeffs, rebuilt


class ExpansionError(ConsistencyError):
    def __init__(self, verdict: AuditVerdict):
        super().__init__(f"expansion of polynomial failed to reconstruct it: {verdict.counterexample}")
        self.verdict = verdict


def expansion_coefficients(fam: AppellFamily, p: Poly) -> list[Fraction]:
    """Coefficients of ``p`` in the basis ``A_0 .. A_deg(p)``.

    Only families whose determining series is invertible qualify; Genocchi
    families have vanishing low-index members and use the shifted bases in
    :mod:`qumbral.genocchi` instead.
    """
    if fam.det_valuation != 0:
        raise NonOrthonormalFamily(
            f"{fam.name} has vanishing members below index {fam.det_valuation}; "
            "use qumbral.genocchi.to_genocchi_basis or expand_in_order_m_basis"
        )
    coeffs, rebuilt = expansion_sides(fam, p)
    if rebuilt != p:
        audit = Audit("expansion-theorem-polynomial")
        audit.record(fam.ctx, rebuilt, p, variant=fam.name, n=p.degree, p=p)
        raise ExpansionError(audit.verdict())
    return coeffs


def functional_expansion_sides(fam: AppellFamily, h: Series, N: int) -> tuple[Series, Series]:
    """Both sides of ``h = sum_k <h | A_k> / [k]! g(t) t^k`` through ``t**N``."""
    ctx = fam.ctx
    g = fam.g_series(N + fam.det_valuation)
    total = Series.zero(ctx, N)
    for k in range(N + fam.det_valuation + 1):
        c = apply(h, fam.polynomial(k)) / ctx.factorial(k)
        if c:
            total = total + g.shift(k).scalar(c)
    return h.truncate(N), total.truncate(N)


def check_functional_expansion(fam: AppellFamily, h: Series, N: int) -> AuditVerdict:
    lhs, rhs = functional_expansion_sides(fam, h, N)
    audit = Audit("expansion-theorem-functional")
    audit.record(fam.ctx, lhs, rhs, variant=fam.name, n=N, h=h)
    return audit.verdict()


def generating_function_sides(fam: AppellFamily, x0: RationalLike, N: int) -> tuple[Series, Series]:
    """``sum A_n(x0) t^n / [n]!`` against ``A(t) e_q(x0 t)`` through ``t**N``."""
    ctx = fam.ctx
    lhs = Series(ctx, [fam.polynomial(n)(x0) / ctx.factorial(n) for n in range(N + 1)], N)
    rhs = fam.det_series(N) * e_q_series(ctx, N).scale(x0)
    return lhs, rhs.truncate(N)


RECURRENCE_VARIANTS = ("statement", "proof", "corrected")


def recurrence_sides(fam: AppellFamily, n: int) -> dict[str, tuple[Poly, Poly]]:
    """Both sides of three readings of the q-Appell recurrence at index ``n``.

    The left side is always ``A_(n+1)(q x)``.  Right sides, with the series
    acting on ``A_n(x)`` as operators:

    * ``statement``: ``q x A_n(x) - q^n [(D_q g)(t) / g(q t)] A_n(x)``
    * ``proof``:     ``q x A_n(x) + q^n [(D_q A)(t) / A(q t)] A_n(x)``
    * ``corrected``: ``q^(n+1) x A_n(x) + q^n [(D_q A)(t/q)] x^n``, which is
      what comparing coefficients of ``D_q [A(t) e_q(q x t)]`` yields.  The
      series here acts on ``x^n`` rather than on ``A_n(x)``: composing with
      ``1/A`` would need Laurent operators to multiply like series, and
      ``t^-1`` does not.
    """
    ctx = fam.ctx
    q = ctx.q
    v = fam.det_valuation
    a_n = fam.polynomial(n)
    lhs = fam.polynomial(n + 1).scale_argument(q)
    qx_a = a_n.shift_degree(1) * q
    need = max(a_n.degree, 0)

    def statement(M: int) -> Series:
        g = fam.g_series(M + 2 * v + 2)
        return (g.q_derivative() * g.scale(q).invert()).scalar(-(q**n))

    def proof(M: int) -> Series:
        A = fam.det_series(M + 2 * v + 2)
        return (A.q_derivative() * A.scale(q).invert()).scalar(q**n)

    def corrected(M: int) -> Series:
        return fam.det_series(M + 1).q_derivative().scale(1 / q).scalar(q**n)

    return {
        "statement": (lhs, qx_a + operator_apply(at_least(statement, need), a_n)),
        "proof": (lhs, qx_a + operator_apply(at_least(proof, need), a_n)),
        "corrected": (
            lhs,
            a_n.shift_degree(1) * q ** (n + 1)
            + operator_apply(at_least(corrected, n), Poly.monomial(ctx, n)),
        ),
    }


def check_recurrence(fam: AppellFamily, n: int) -> AuditVerdict:
    """Evaluate every reading of the recurrence; see :func:`recurrence_sides`."""
    audit = Audit("recurrence", RECURRENCE_VARIANTS)
    for variant, (lhs, rhs) in recurrence_sides(fam, n).items():
        audit.record(fam.ctx, lhs, rhs, variant=variant, n=n, family=fam.name)
    return audit.verdict()
