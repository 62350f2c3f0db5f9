"""Genocchi-specific constructions: shifted bases, closed forms and their audits.

``G_0(x)`` vanishes and ``G_k(x)`` has degree ``k - 1``, so polynomials are
expanded over the shifted family ``G_1, G_2, ...``; for order ``m`` the
members below index ``m`` vanish and the basis starts at ``G^[m]_m``.
Ground truth always comes from the generating functions plus exact
triangular solves; printed closed forms are evaluated term by term and
compared against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional, Sequence

from .appell import AppellFamily, make_bernoulli, make_euler, make_genocchi, make_genocchi_order
from .errors import ConsistencyError
from .qcore import QContext, compositions
from .qpoly import (
    Poly,
    eval_poly,
    jackson_integral,
    q_derivative_power,
    x_minus_one_power,
)
from .qseries import Series, e_q_series
from .umbral import apply
from .verdict import Audit, AuditVerdict


def genocchi_g(ctx: QContext, N: int) -> Series:
    """``(e_q(t) + 1) / (2t)`` through ``t**N``."""
    return (e_q_series(ctx, N + 1) + 1).shift(-1).scalar(Fraction(1, 2))


# -- bases and triangular solves ---------------------------------------------


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients of a polynomial over a named basis.

    ``coeffs[i]`` multiplies basis member ``offset + i``.  ``alternatives``
    holds the same coefficients computed along other routes, keyed by route
    name, and ``discrepancies`` lists the routes that disagree with the
    linear solve.
    """

    ctx: QContext
    basis: str
    offset: int
    coeffs: tuple[Fraction, ...]
    alternatives: tuple[tuple[str, tuple[Fraction, ...]], ...] = ()
    discrepancies: tuple[str, ...] = ()

    def alternative(self, route: str) -> tuple[Fraction, ...]:
        return dict(self.alternatives)[route]


def basis_member(ctx: QContext, basis: str, index: int) -> Poly:
    if basis == "monomial":
        return Poly.monomial(ctx, index)
    if basis == "xm1":
        return x_minus_one_power(ctx, index)
    return _family_for(ctx, basis).polynomial(index)


def basis_offset(basis: str) -> int:
    if basis in ("monomial", "xm1", "bernoulli", "euler"):
        return 0
    if basis == "genocchi":
        return 1
    if basis.startswith("genocchi^"):
        return int(basis.split("^", 1)[1])
    raise ValueError(f"unknown basis {basis!r}")


_FAMILIES: dict[tuple, AppellFamily] = {}


def _family_for(ctx: QContext, name: str) -> AppellFamily:
    key = (ctx.q, name)
    fam = _FAMILIES.get(key)
    if fam is None:
        if name == "bernoulli":
            fam = make_bernoulli(ctx)
        elif name == "euler":
            fam = make_euler(ctx)
        elif name == "genocchi":
            fam = make_genocchi(ctx)
        elif name.startswith("genocchi^"):
            fam = make_genocchi_order(ctx, int(name.split("^", 1)[1]))
        else:
            raise ValueError(f"unknown basis {name!r}")
        fam = _FAMILIES.setdefault(key, fam)
    return fam


def solve_triangular(p: Poly, members: Sequence[Poly]) -> list[Fraction]:
    """Coefficients c with ``sum c_i members[i] == p``, where ``deg members[i] == i``."""
    for i, b in enumerate(members):
        if b.degree != i:
            raise ValueError(f"basis member {i} has degree {b.degree}")
    if p.degree >= len(members):
        raise ValueError("basis too short for polynomial degree")
    residual = p
    coeffs = [Fraction(0)] * len(members)
    for i in range(len(members) - 1, -1, -1):
        c = residual.coeff(i) / members[i].coeffs[-1]
        if c:
            coeffs[i] = c
            residual = residual - members[i] * c
    if not residual.is_zero:
        raise ConsistencyError(f"triangular solve left residual {residual}")
    return coeffs


def combine(ctx: QContext, members: Sequence[Poly], coeffs: Sequence[Fraction]) -> Poly:
    total = Poly(ctx)
    for b, c in zip(members, coeffs):
        if c:
            total = total + b * c
    return total


def expand(p: Poly, basis: str) -> BasisExpansion:
    """Expand ``p`` over the degree-complete part of ``basis`` by a triangular solve."""
    ctx = p.ctx
    offset = basis_offset(basis)
    count = max(p.degree + 1, 1)
    members = [basis_member(ctx, basis, offset + i) for i in range(count)]
    return BasisExpansion(ctx, basis, offset, tuple(solve_triangular(p, members)))


def reconstruct(e: BasisExpansion) -> Poly:
    members = [basis_member(e.ctx, e.basis, e.offset + i) for i in range(len(e.coeffs))]
    return combine(e.ctx, members, e.coeffs)


# -- first-order Genocchi ------------------------------------------------------


def genocchi_pairing_closed_form(p: Poly, audit: Optional[Audit] = None) -> AuditVerdict:
    """Compare ``<(e_q+1)/(2t) | p>`` with two closed forms.

    ``without-p0`` is half the Jackson integral over [0, 1]; ``printed``
    adds ``p(0)`` inside the half.
    """
    ctx = p.ctx
    audit = audit or Audit("genint-closed-form", ("printed", "without-p0"))
    truth = apply(genocchi_g(ctx, max(p.degree, 0)), p)
    integral = jackson_integral(p, 0, 1)
    audit.record(ctx, truth, (integral + eval_poly(p, 0)) / 2, variant="printed", n=p.degree, p=p)
    audit.record(ctx, truth, integral / 2, variant="without-p0", n=p.degree, p=p)
    return audit.verdict()


def number_recurrence_sides(ctx: QContext, n: int) -> tuple[Fraction, Fraction]:
    """``sum_{k=1}^n [n+1, k+1] G_(n-k)`` and ``-[n+1] (1 + G_n)``."""
    fam = _family_for(ctx, "genocchi")
    lhs = sum((ctx.binomial(n + 1, k + 1) * fam.number(n - k) for k in range(1, n + 1)), Fraction(0))
    rhs = -ctx.number(n + 1) * (1 + fam.number(n))
    return lhs, rhs


def audit_number_recurrence(ctx: QContext, nmax: int, audit: Optional[Audit] = None) -> AuditVerdict:
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    audit = audit or Audit("genocchi-number-recurrence", ("g0-claim", "printed"))
    fam = _family_for(ctx, "genocchi")
    audit.record(ctx, fam.number(0), Fraction(1), variant="g0-claim", n=0)
    for n in range(1, nmax + 1):
        lhs, rhs = number_recurrence_sides(ctx, n)
        audit.record(ctx, lhs, rhs, variant="printed", n=n)
    return audit.verdict()


def integral_convolution_sides(ctx: QContext, n: int) -> tuple[Fraction, Fraction]:
    """Jackson integral of ``G_n`` over [0, 1]: directly, and via its number expansion."""
    fam = _family_for(ctx, "genocchi")
    direct = jackson_integral(fam.polynomial(n), 0, 1)
    via_numbers = sum(
        (ctx.binomial(n, k) * fam.number(n - k) / ctx.number(k + 1) for k in range(n + 1)),
        Fraction(0),
    )
    return direct, via_numbers


def g_pairing_identity_sides(ctx: QContext, n: int) -> tuple[Fraction, Fraction]:
    """``(int_0^1 G_n + G_n(0)) / 2`` against ``[n]! delta_(n,0)``."""
    fam = _family_for(ctx, "genocchi")
    p = fam.polynomial(n)
    lhs = (jackson_integral(p, 0, 1) + eval_poly(p, 0)) / 2
    return lhs, Fraction(1) if n == 0 else Fraction(0)


def shifted_members(ctx: QContext, count: int, m: int = 1) -> list[Poly]:
    name = "genocchi" if m == 1 else f"genocchi^{m}"
    fam = _family_for(ctx, name)
    return [fam.polynomial(m + i) for i in range(count)]


def functional_coefficient(p: Poly, k: int) -> Fraction:
    """``<(e_q+1)/(2t) | D_q^k p> / [k]_q!``."""
    ctx = p.ctx
    return apply(genocchi_g(ctx, max(p.degree, 0)), q_derivative_power(p, k)) / ctx.factorial(k)


def closed_form_coefficient(p: Poly, k: int) -> Fraction:
    """``(int_0^1 D_q^k p + (D_q^k p)(0)) / (2 [k]_q!)``."""
    ctx = p.ctx
    d = q_derivative_power(p, k)
    return (jackson_integral(d, 0, 1) + eval_poly(d, 0)) / (2 * ctx.factorial(k))


def to_genocchi_basis(p: Poly) -> BasisExpansion:
    """Expand ``p`` over ``G_1 .. G_(deg p + 1)``.

    The linear solve is authoritative.  The functional route
    ``<(e_q+1)/(2t) | D_q^k p> / [k]!`` is recorded alongside on the same
    indices and listed in ``discrepancies`` when it disagrees.
    """
    ctx = p.ctx
    count = max(p.degree + 1, 1)
    coeffs = tuple(solve_triangular(p, shifted_members(ctx, count)))
    functional = tuple(functional_coefficient(p, k) for k in range(1, count + 1))
    return BasisExpansion(
        ctx,
        "genocchi",
        1,
        coeffs,
        alternatives=(("functional", functional),),
        discrepancies=() if functional == coeffs else ("functional",),
    )


def from_genocchi_basis(e: BasisExpansion) -> Poly:
    return reconstruct(e)


COEFFICIENT_VARIANTS = ("printed", "functional", "corrected")


def coefficient_theorem_sides(p: Poly) -> dict[str, tuple[Poly, Poly]]:
    """Rebuild ``p`` from three coefficient recipes in the Genocchi basis.

    ``printed`` and ``functional`` use indices ``0 .. deg p`` with the
    integral closed form and with ``<(e_q+1)/(2t) | D_q^k p>`` respectively;
    ``corrected`` pairs with ``(e_q+1)/(2t) t^k`` over ``1 .. deg p + 1``.
    """
    ctx = p.ctx
    fam = _family_for(ctx, "genocchi")
    d = max(p.degree, 0)
    low = range(d + 1)
    printed = combine(ctx, [fam.polynomial(k) for k in low], [closed_form_coefficient(p, k) for k in low])
    functional = combine(ctx, [fam.polynomial(k) for k in low], [functional_coefficient(p, k) for k in low])
    shifted = range(1, d + 2)
    g = genocchi_g(ctx, d + 1)
    pairing = [apply(g.shift(k), p) / ctx.factorial(k) for k in shifted]
    corrected = combine(ctx, [fam.polynomial(k) for k in shifted], pairing)
    return {"printed": (printed, p), "functional": (functional, p), "corrected": (corrected, p)}


def integral_expansion_sides(p: Poly) -> dict[str, tuple[Poly, Poly]]:
    """``p = 1/2 sum_k G_k/[k]! (int_0^1 D^k p + (D^k p)(0))`` over ``k = 0 .. deg p``.

    ``without-p0`` drops the ``(D^k p)(0)`` term.
    """
    ctx = p.ctx
    fam = _family_for(ctx, "genocchi")
    printed = Poly(ctx)
    bare = Poly(ctx)
    for k in range(max(p.degree, 0) + 1):
        d = q_derivative_power(p, k)
        scale = 1 / (2 * ctx.factorial(k))
        g_k = fam.polynomial(k)
        printed = printed + g_k * (scale * (jackson_integral(d, 0, 1) + eval_poly(d, 0)))
        bare = bare + g_k * (scale * jackson_integral(d, 0, 1))
    return {"printed": (printed, p), "without-p0": (bare, p)}


# -- (x-1)_q^n -----------------------------------------------------------------


def xm1_pairing(ctx: QContext, n: int, k: int) -> Fraction:
    """``<e_q(t) t^k | (x-1)_q^n>``."""
    return apply(e_q_series(ctx, max(n - k, 0)).shift(k), x_minus_one_power(ctx, n))


def xm1_monomial_sides(ctx: QContext, n: int) -> dict[str, tuple[Poly, Poly]]:
    """Two readings of a monomial expansion of ``(x-1)_q^n``.

    ``printed``: ``sum_l (-1)^(n-l) q^(l(l-1)/2) x^l``;
    ``with-q-binomial``: the same with ``[n, l]_q`` inserted;
    ``from-binomial-formula``: ``sum_l [n, l]_q (-1)^(n-l) q^((n-l)(n-l-1)/2) x^l``,
    which is what the q-binomial formula gives after writing ``l = n - k``.
    """
    truth = x_minus_one_power(ctx, n)
    printed = Poly(ctx, [(-1) ** (n - l) * ctx.power(l * (l - 1) // 2) for l in range(n + 1)])
    with_binomial = Poly(
        ctx, [ctx.binomial(n, l) * (-1) ** (n - l) * ctx.power(l * (l - 1) // 2) for l in range(n + 1)]
    )
    derived = Poly(
        ctx,
        [ctx.binomial(n, l) * (-1) ** (n - l) * ctx.power((n - l) * (n - l - 1) // 2) for l in range(n + 1)],
    )
    return {
        "printed": (truth, printed),
        "with-q-binomial": (truth, with_binomial),
        "from-binomial-formula": (truth, derived),
    }


def xm1_expansion_sides(ctx: QContext, n: int) -> dict[str, tuple[Poly, Poly]]:
    """``G_n(x) = sum_k [n,k] G_(n-k)(1) (x-1)_q^e`` with ``e = n`` (printed) or ``e = k``.

    The ground-truth coefficients over the ``(x-1)_q^k`` basis are also
    checked against ``[n,k] G_(n-k)(1)`` as the ``coefficients`` entry.
    """
    fam = _family_for(ctx, "genocchi")
    target = fam.polynomial(n)
    weights = [ctx.binomial(n, k) * eval_poly(fam.polynomial(n - k), 1) for k in range(n + 1)]
    printed = combine(ctx, [x_minus_one_power(ctx, n)] * (n + 1), weights)
    corrected = combine(ctx, [x_minus_one_power(ctx, k) for k in range(n + 1)], weights)
    solved = list(solve_triangular(target, [x_minus_one_power(ctx, k) for k in range(n + 1)]))
    return {
        "printed": (target, printed),
        "corrected": (target, corrected),
        "coefficients": (solved, weights),
    }


def xm1_closed_form(ctx: QContext, n: int, denominator: Callable[[int], Fraction]) -> Poly:
    """Evaluate the Genocchi-basis closed form for ``(x-1)_q^n``.

    ``denominator(l)`` supplies the q-number dividing each inner term.
    """
    fam = _family_for(ctx, "genocchi")
    total = Poly(ctx)
    for k in range(n + 1):
        inner = Fraction(0)
        for l in range(n - k + 1):
            inner += (
                ctx.binomial(n, k)
                * ctx.binomial(n - k, l)
                / denominator(l)
                * (-1) ** (n - k - l)
                * ctx.power(l * (l - 1) // 2)
            )
        total = total + fam.polynomial(k) * (inner + ctx.binomial(n, k))
    return total * Fraction(1, 2)


def xm1_closed_form_sides(ctx: QContext, n: int, m: int) -> dict[str, tuple[Poly, Poly]]:
    truth = x_minus_one_power(ctx, n)
    return {
        "printed": (truth, xm1_closed_form(ctx, n, lambda l: ctx.number(m + 1))),
        "l-denominator": (truth, xm1_closed_form(ctx, n, lambda l: ctx.number(l + 1))),
    }


def audit_xminus1_expansion(ctx: QContext, nmax: int, mmax: int = 1) -> tuple[AuditVerdict, ...]:
    """Audits for the pairing, the Genocchi expansion and the closed form of ``(x-1)_q^n``."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    pairing = Audit("xm1-pairing")
    expansion = Audit("xm1-genocchi-expansion", ("printed", "corrected"))
    closed = Audit("xm1-genocchi-closed-form", ("printed", "l-denominator"))
    for n in range(nmax + 1):
        for k in range(nmax + 1):
            expected = ctx.factorial(n) if n == k else Fraction(0)
            pairing.record(ctx, xm1_pairing(ctx, n, k), expected, n=n, k=k)
        sides = xm1_expansion_sides(ctx, n)
        solved, weights = sides["coefficients"]
        if solved != weights:
            raise ConsistencyError(f"(x-1)_q basis coefficients of G_{n} disagree with the pairing route")
        for variant in ("printed", "corrected"):
            expansion.record(ctx, *sides[variant], variant=variant, n=n)
        for m in range(1, mmax + 1):
            for variant, (lhs, rhs) in xm1_closed_form_sides(ctx, n, m).items():
                closed.record(ctx, lhs, rhs, variant=variant, n=n, m=m)
    return pairing.verdict(), expansion.verdict(), closed.verdict()


# -- higher order --------------------------------------------------------------


def higher_order_number_sides(ctx: QContext, n: int, m: int) -> tuple[Fraction, Fraction]:
    """``G^[m]_n`` from the m-th power series, and from the multinomial sum over ``G_i``."""
    series_value = _family_for(ctx, f"genocchi^{m}" if m > 1 else "genocchi").number(n)
    g = _family_for(ctx, "genocchi")
    total = Fraction(0)
    for parts in compositions(n, m):
        term = ctx.factorial(n)
        for i in parts:
            term *= g.number(i) / ctx.factorial(i)
        total += term
    return series_value, total


def higher_order_numbers(ctx: QContext, n: int, m: int) -> Fraction:
    """``G^[m]_n``; the multinomial route must agree with the series route."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    series_value, multinomial = higher_order_number_sides(ctx, n, m)
    if series_value != multinomial:
        raise ConsistencyError(f"G^[{m}]_{n}: series {series_value} != multinomial {multinomial}")
    return series_value


def order_reduction_sides(ctx: QContext, n: int, m: int) -> dict[str, tuple[Poly, Poly]]:
    """``G^[m]_n(x)`` against ``c sum_k [n,k] G^[m-1]_(n-k) G_k(x)``.

    ``printed`` has ``c = 2^-(m-1)``, ``corrected`` has ``c = 1``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    truth = _family_for(ctx, f"genocchi^{m}" if m > 1 else "genocchi").polynomial(n)
    g = _family_for(ctx, "genocchi")
    if m == 1:
        lower = [Fraction(1)] + [Fraction(0)] * n
    else:
        prev = _family_for(ctx, f"genocchi^{m - 1}" if m > 2 else "genocchi")
        lower = [prev.number(j) for j in range(n + 1)]
    plain = combine(
        ctx,
        [g.polynomial(k) for k in range(n + 1)],
        [ctx.binomial(n, k) * lower[n - k] for k in range(n + 1)],
    )
    return {
        "printed": (truth, plain * Fraction(1, 2 ** (m - 1))),
        "corrected": (truth, plain),
    }


def audit_order_reduction(ctx: QContext, n: int, m: int, audit: Optional[Audit] = None) -> AuditVerdict:
    audit = audit or Audit("genocchi-order-reduction", ("printed", "corrected"))
    for variant, (lhs, rhs) in order_reduction_sides(ctx, n, m).items():
        audit.record(ctx, lhs, rhs, variant=variant, n=n, m=m)
    return audit.verdict()


def order_m_g(ctx: QContext, m: int, N: int) -> Series:
    """``((e_q+1)/(2t))**m`` through ``t**N``."""
    return genocchi_g(ctx, N + m - 1) ** m if m > 1 else genocchi_g(ctx, N)


def order_m_pairing(ctx: QContext, m: int, k: int, p: Poly) -> Fraction:
    """``<((e_q+1)/(2t))^m t^k | p>``."""
    d = max(p.degree, 0)
    return apply(order_m_g(ctx, m, max(d - k, 0) + m).shift(k), p)


def expand_in_order_m_basis(p: Poly, m: int) -> BasisExpansion:
    """Expand ``p`` over ``G^[m]_m .. G^[m]_(deg p + m)``.

    Alongside the linear solve, two pairing routes are recorded: ``pairing``
    uses ``<g^m t^k | p> / [k]!`` on the same indices, and ``printed-range``
    uses it on ``k = 0 .. deg p``.  ``discrepancies`` names the routes that
    fail to reproduce the solve (for ``printed-range``: fail to rebuild ``p``).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    ctx = p.ctx
    name = "genocchi" if m == 1 else f"genocchi^{m}"
    fam = _family_for(ctx, name)
    count = max(p.degree + 1, 1)
    coeffs = tuple(solve_triangular(p, shifted_members(ctx, count, m)))
    pairing = tuple(order_m_pairing(ctx, m, k, p) / ctx.factorial(k) for k in range(m, m + count))
    printed_idx = range(max(p.degree, 0) + 1)
    printed = tuple(order_m_pairing(ctx, m, k, p) / ctx.factorial(k) for k in printed_idx)
    rebuilt = combine(ctx, [fam.polynomial(k) for k in printed_idx], printed)
    discrepancies = []
    if pairing != coeffs:
        discrepancies.append("pairing")
    if rebuilt != p:
        discrepancies.append("printed-range")
    return BasisExpansion(
        ctx,
        name,
        m,
        coeffs,
        alternatives=(("pairing", pairing), ("printed-range", printed)),
        discrepancies=tuple(discrepancies),
    )


def _composition_weight(ctx: QContext, l: int, i: int) -> Fraction:
    """``sum over l_1+..+l_i = l`` of the q-multinomial ``[l; l_1..l_i]``."""
    total = Fraction(0)
    for parts in compositions(l, i):
        term = ctx.factorial(l)
        for part in parts:
            term /= ctx.factorial(part)
        total += term
    return total


CLOSED_FORM_VARIANTS = ("printed", "binomial")


def order_m_closed_form_coefficient(
    ctx: QContext, numbers: Callable[[int], Fraction], n: int, m: int, k: int, variant: str
) -> Fraction:
    """One coefficient of the two-branch closed form for expanding over ``G^[m]_k``.

    ``numbers(j)`` supplies the family numbers (``G_j`` or ``A_j``).  In the
    ``binomial`` variant the weights of ``(e_q + 1)^m`` are the ordinary
    binomials ``C(m, i)`` in both branches; ``printed`` uses ``[m, i]_q``
    for ``k < m`` and no weight for ``k >= m``.
    """
    if variant not in CLOSED_FORM_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if k < m:
        N = n + m - k
        prefactor = ctx.binomial(m, k) / (2**m * ctx.factorial(m) * ctx.binomial(N, m - k))
        weight = (lambda i: ctx.binomial(m, i)) if variant == "printed" else (lambda i: comb(m, i))
    else:
        N = n - k + m
        prefactor = ctx.binomial(n, k - m) / (2**m * ctx.factorial(k) * ctx.binomial(k, m))
        weight = (lambda i: 1) if variant == "printed" else (lambda i: comb(m, i))
    inner = Fraction(0)
    for i in range(m + 1):
        part = Fraction(0)
        for l in range(N + 1):
            part += _composition_weight(ctx, l, i) * ctx.binomial(N, l) * numbers(N - l)
        inner += weight(i) * part
    return prefactor * inner


def order_m_closed_form_sides(fam: AppellFamily, n: int, m: int) -> dict[str, tuple[Poly, Poly]]:
    """Rebuild ``A_n(x)`` from the closed-form coefficients over ``G^[m]_0 .. G^[m]_n``."""
    ctx = fam.ctx
    order_m = _family_for(ctx, "genocchi" if m == 1 else f"genocchi^{m}")
    truth = fam.polynomial(n)
    out = {}
    for variant in CLOSED_FORM_VARIANTS:
        coeffs = [order_m_closed_form_coefficient(ctx, fam.number, n, m, k, variant) for k in range(n + 1)]
        out[variant] = (truth, combine(ctx, [order_m.polynomial(k) for k in range(n + 1)], coeffs))
    return out


def appell_in_genocchi_basis(fam: AppellFamily, n: int, m: int) -> tuple[BasisExpansion, AuditVerdict]:
    """Ground-truth expansion of ``A_n`` over order-m Genocchi polynomials, plus the closed-form audit."""
    expansion = expand_in_order_m_basis(fam.polynomial(n), m)
    identity = "genocchi-order-m-closed-form" if fam.name == "genocchi" else "appell-order-m-closed-form"
    audit = Audit(identity, CLOSED_FORM_VARIANTS)
    for variant, (lhs, rhs) in order_m_closed_form_sides(fam, n, m).items():
        audit.record(fam.ctx, lhs, rhs, variant=variant, n=n, m=m, family=fam.name)
    return expansion, audit.verdict()


def audit_order_m_closed_form(ctx: QContext, n: int, m: int) -> AuditVerdict:
    return appell_in_genocchi_basis(_family_for(ctx, "genocchi"), n, m)[1]
