"""Registry of audited identities and the grid runner behind ``qumbral audit``.

Every registered identity is a function of a :class:`RunConfig` returning an
:class:`~qumbral.verdict.AuditVerdict`.  Cells are visited in a fixed order
(q ascending with the classical limit last, then n, then m), and random
instances come from generators seeded by the identity id, so a given config
always yields the same verdicts and counterexamples.
"""

from __future__ import annotations

import random
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from . import genocchi as geno
from .appell import (
    AppellFamily,
    RECURRENCE_VARIANTS,
    expansion_sides,
    functional_expansion_sides,
    generating_function_sides,
    polynomial_from_inverse,
    recurrence_sides,
)
from .qcore import QContext, q_shifted_factorial
from .qpoly import (
    Poly,
    eval_poly,
    jackson_antiderivative,
    q_add_power,
    q_derivative_poly,
    q_derivative_power,
)
from .qseries import Series, e_q_series
from .umbral import (
    adjoint_sides,
    apply,
    convolution_sides,
    expand_functional,
    expand_polynomial,
    multinomial_sides,
    operator_apply,
)
from .verdict import Audit, AuditVerdict

DEFAULT_Q_GRID = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(9, 10))
FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    q_grid: tuple[Fraction, ...] = DEFAULT_Q_GRID
    nmax: int = 10
    mmax: int = 3
    truncation_margin: int = 4
    format: str = "text"
    output: Optional[str] = None
    include_classical: bool = True

    def __post_init__(self):
        for q in self.q_grid:
            if not (0 < q < 1 or q == 1):
                raise ValueError(f"q must satisfy 0 < q < 1 or q = 1, got {q}")
        if self.nmax < 0 or self.mmax < 1 or self.truncation_margin < 0:
            raise ValueError("need nmax >= 0, mmax >= 1, truncation margin >= 0")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")

    @property
    def truncation(self) -> int:
        return self.nmax + self.mmax + self.truncation_margin

    @property
    def q_values(self) -> tuple[Fraction, ...]:
        qs = sorted(set(self.q_grid) - {Fraction(1)})
        if self.include_classical or Fraction(1) in self.q_grid:
            qs.append(Fraction(1))
        return tuple(qs)

    def contexts(self) -> list[QContext]:
        return [_context(q) for q in self.q_values]


@lru_cache(maxsize=None)
def _context(q: Fraction) -> QContext:
    return QContext(q)


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    runner: Callable[[RunConfig], AuditVerdict]

    def run(self, cfg: RunConfig) -> AuditVerdict:
        verdict = self.runner(cfg)
        return AuditVerdict(self.id, verdict.variants, self.description)


REGISTRY: dict[str, Identity] = {}


def identity(ident: str, description: str):
    def register(fn):
        if ident in REGISTRY:
            raise ValueError(f"duplicate identity {ident}")
        REGISTRY[ident] = Identity(ident, description, fn)
        return fn

    return register


def run_audit(cfg: RunConfig, ids: Optional[Iterable[str]] = None, jobs: int = 1) -> list[AuditVerdict]:
    """Run identities in registry order; ``jobs > 1`` evaluates them on a thread pool."""
    if ids is None:
        selected = list(REGISTRY.values())
    else:
        ids = list(ids)
        unknown = [i for i in ids if i not in REGISTRY]
        if unknown:
            raise KeyError(", ".join(unknown))
        selected = [REGISTRY[i] for i in REGISTRY if i in ids]
    if jobs <= 1:
        return [ident.run(cfg) for ident in selected]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda ident: ident.run(cfg), selected))


# -- helpers -------------------------------------------------------------------


def _rng(ident: str) -> random.Random:
    return random.Random(zlib.crc32(ident.encode()))


def random_rational(rng: random.Random, span: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_poly(rng: random.Random, ctx: QContext, max_degree: int) -> Poly:
    d = rng.randint(0, max_degree)
    return Poly(ctx, [random_rational(rng) for _ in range(d + 1)])


def random_series(rng: random.Random, ctx: QContext, truncation: int, valuation: int = 0) -> Series:
    coeffs = [random_rational(rng) for _ in range(truncation - valuation + 1)]
    if coeffs and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return Series(ctx, coeffs, truncation, start=valuation)


def _families(ctx: QContext, cfg: RunConfig, orders: bool = True) -> list[AppellFamily]:
    names = ["bernoulli", "euler", "genocchi"]
    if orders:
        names += [f"genocchi^{m}" for m in range(2, cfg.mmax + 1)]
    return [geno._family_for(ctx, name) for name in names]


def _family_names(cfg: RunConfig, orders: bool = True) -> tuple[str, ...]:
    names = ["bernoulli", "euler", "genocchi"]
    if orders:
        names += [f"genocchi^{m}" for m in range(2, cfg.mmax + 1)]
    return tuple(names)


def _sample_polys(rng: random.Random, ctx: QContext, cfg: RunConfig, count: int) -> list[Poly]:
    d = min(cfg.nmax, 8)
    return [Poly.monomial(ctx, k) for k in range(d + 1)] + [
        random_poly(rng, ctx, d) for _ in range(count)
    ]


# -- scalar, series and polynomial layer ---------------------------------------


@identity("q-binomial-formula", "expansion of (1-a)_q^n as both a product and a q-binomial sum")
def _q_binomial_formula(cfg):
    audit = Audit("q-binomial-formula")
    points = [Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(1), Fraction(3, 2)]
    for ctx in cfg.contexts():
        for n in range(cfg.nmax + 1):
            for a in points:
                product = q_shifted_factorial(ctx, a, n)
                total = sum(
                    (ctx.binomial(n, k) * ctx.power(k * (k - 1) // 2) * (-a) ** k for k in range(n + 1)),
                    Fraction(0),
                )
                audit.record(ctx, product, total, n=n, a=a)
                audit.record(ctx, eval_poly(q_add_power(ctx, n, -a), 1), product, n=n, a=a)
    return audit.verdict()


@identity("q-exp-fixed-point", "the q-exponential is fixed by the q-derivative")
def _q_exp_fixed_point(cfg):
    audit = Audit("q-exp-fixed-point")
    for ctx in cfg.contexts():
        N = cfg.truncation
        audit.record(ctx, e_q_series(ctx, N).q_derivative(), e_q_series(ctx, N - 1), n=N)
    return audit.verdict()


@identity(
    "q-derivative-quotient",
    "the coefficient rule for D_q equals the difference quotient (p(qz)-p(z))/((q-1)z); q < 1 only",
)
def _q_derivative_quotient(cfg):
    audit = Audit("q-derivative-quotient")
    rng = _rng("q-derivative-quotient")
    for ctx in cfg.contexts():
        if ctx.classical:
            continue
        q = ctx.q
        for _ in range(10):
            p = random_poly(rng, ctx, min(cfg.nmax, 8))
            z = random_rational(rng) or Fraction(1)
            quotient = (eval_poly(p, q * z) - eval_poly(p, z)) / ((q - 1) * z)
            audit.record(ctx, eval_poly(q_derivative_poly(p), z), quotient, n=p.degree, p=p, z=z)
    return audit.verdict()


@identity("jackson-ftc", "the q-derivative undoes the Jackson integral from 0, and vice versa up to p(0)")
def _jackson_ftc(cfg):
    audit = Audit("jackson-ftc")
    rng = _rng("jackson-ftc")
    for ctx in cfg.contexts():
        for p in _sample_polys(rng, ctx, cfg, 5):
            audit.record(ctx, q_derivative_poly(jackson_antiderivative(p)), p, n=p.degree, p=p)
            audit.record(
                ctx, jackson_antiderivative(q_derivative_poly(p)), p - eval_poly(p, 0), n=p.degree, p=p
            )
    return audit.verdict()


@identity("appell-gf", "A(t) e_q(x t) generates A_n(x) t^n / [n]! for every built-in family")
def _appell_gf(cfg):
    audit = Audit("appell-gf", _family_names(cfg))
    rng = _rng("appell-gf")
    for ctx in cfg.contexts():
        for fam in _families(ctx, cfg):
            x0 = random_rational(rng)
            lhs, rhs = generating_function_sides(fam, x0, cfg.nmax)
            audit.record(ctx, lhs, rhs, variant=fam.name, n=cfg.nmax, m=fam.order, x=x0)
    return audit.verdict()


@identity("appell-derivative", "D_q A_n(x) = [n]_q A_(n-1)(x) for every built-in family")
def _appell_derivative(cfg):
    audit = Audit("appell-derivative", _family_names(cfg))
    for ctx in cfg.contexts():
        for fam in _families(ctx, cfg):
            for n in range(1, cfg.nmax + 1):
                lhs = q_derivative_poly(fam.polynomial(n))
                audit.record(ctx, lhs, fam.polynomial(n - 1) * ctx.number(n), variant=fam.name, n=n, m=fam.order)
    return audit.verdict()


# -- umbral layer -------------------------------------------------------------


@identity("eq-particular", "<t^k | x^n> = [n]_q! delta(n, k)")
def _eq_particular(cfg):
    audit = Audit("eq-particular")
    for ctx in cfg.contexts():
        for n in range(cfg.nmax + 1):
            x_n = Poly.monomial(ctx, n)
            for k in range(cfg.nmax + 1):
                lhs = apply(Series.monomial(ctx, k, max(n, k)), x_n)
                audit.record(ctx, lhs, ctx.factorial(n) if n == k else Fraction(0), n=n, k=k)
    return audit.verdict()


@identity("evaluation-functional", "<e_q(y t) | p> = p(y) and <e_q(y t) +- 1 | p> = p(y) +- p(0)")
def _evaluation_functional(cfg):
    audit = Audit("evaluation-functional")
    rng = _rng("evaluation-functional")
    for ctx in cfg.contexts():
        for _ in range(10):
            p = random_poly(rng, ctx, min(cfg.nmax, 8))
            y = random_rational(rng)
            e = e_q_series(ctx, max(p.degree, 0)).scale(y)
            audit.record(ctx, apply(e, p), eval_poly(p, y), n=p.degree, p=p, y=y)
            audit.record(ctx, apply(e + 1, p), eval_poly(p, y) + eval_poly(p, 0), n=p.degree, p=p, y=y)
            audit.record(ctx, apply(e - 1, p), eval_poly(p, y) - eval_poly(p, 0), n=p.degree, p=p, y=y)
    return audit.verdict()


@identity("expansion-functional", "a series is rebuilt from its pairings <f | x^k> / [k]!")
def _expansion_functional(cfg):
    audit = Audit("expansion-functional")
    rng = _rng("expansion-functional")
    for ctx in cfg.contexts():
        N = cfg.nmax
        for f in [e_q_series(ctx, N)] + [random_series(rng, ctx, N) for _ in range(5)]:
            audit.record(ctx, expand_functional(f, N), f, n=N, f=f)
    return audit.verdict()


@identity("expansion-polynomial", "a polynomial is rebuilt from its pairings <t^k | p> / [k]!")
def _expansion_polynomial(cfg):
    audit = Audit("expansion-polynomial")
    rng = _rng("expansion-polynomial")
    for ctx in cfg.contexts():
        for p in _sample_polys(rng, ctx, cfg, 5):
            audit.record(ctx, expand_polynomial(p), p, n=p.degree, p=p)
    return audit.verdict()


@identity(
    "adjoint",
    "<f g | p> = <f | g p>; also tried with a Laurent inner factor g and a Laurent outer functional f",
)
def _adjoint(cfg):
    variants = ("power-series", "laurent-inner", "laurent-outer")
    audit = Audit("adjoint", variants)
    rng = _rng("adjoint")
    for ctx in cfg.contexts():
        for _ in range(8):
            p = random_poly(rng, ctx, min(cfg.nmax, 8))
            N = max(p.degree, 0) + 4
            for variant in variants:
                vf, vg = {"power-series": (rng.randint(0, 2), rng.randint(0, 2)),
                          "laurent-inner": (rng.randint(0, 2), -rng.randint(1, 2)),
                          "laurent-outer": (-rng.randint(1, 2), rng.randint(0, 2))}[variant]
                f = random_series(rng, ctx, N, vf)
                g = random_series(rng, ctx, N, vg)
                lhs, rhs = adjoint_sides(f, g, p)
                audit.record(ctx, lhs, rhs, variant=variant, n=p.degree, f=f, g=g, p=p)
    return audit.verdict()


@identity(
    "t-power-action",
    "t^k x^n against D_q^k x^n: printed coefficient [n]!/[k]! and corrected [n]!/[n-k]!",
)
def _t_power_action(cfg):
    audit = Audit("t-power-action", ("printed", "corrected"))
    for ctx in cfg.contexts():
        fact = ctx.factorial
        for n in range(cfg.nmax + 1):
            x_n = Poly.monomial(ctx, n)
            for k in range(cfg.nmax + 1):
                truth = q_derivative_power(x_n, k)
                for variant, c in (("printed", fact(n) / fact(k)), ("corrected", fact(n) / fact(n - k) if k <= n else 0)):
                    rule = Poly.monomial(ctx, n - k) * c if k <= n else Poly(ctx)
                    audit.record(ctx, rule, truth, variant=variant, n=n, k=k)
    return audit.verdict()


@identity("pairing-convolution", "<f g | x^n> = sum_k [n,k]_q <f | x^k> <g | x^(n-k)>")
def _pairing_convolution(cfg):
    audit = Audit("pairing-convolution")
    rng = _rng("pairing-convolution")
    for ctx in cfg.contexts():
        N = cfg.nmax
        for _ in range(4):
            f = random_series(rng, ctx, N, rng.randint(0, 2))
            g = random_series(rng, ctx, N, rng.randint(0, 2))
            for n in range(N + 1):
                audit.record(ctx, *convolution_sides(f, g, n), n=n, f=f, g=g)
    return audit.verdict()


@identity("pairing-multinomial", "<f_1...f_k | x^n> is the q-multinomial convolution of the single pairings")
def _pairing_multinomial(cfg):
    audit = Audit("pairing-multinomial")
    rng = _rng("pairing-multinomial")
    for ctx in cfg.contexts():
        N = min(cfg.nmax, 8)
        for k in range(1, 5):
            fs = [random_series(rng, ctx, N, rng.randint(0, 1)) for _ in range(k)]
            for n in range(N + 1):
                audit.record(ctx, *multinomial_sides(fs, n), n=n, k=k)
    return audit.verdict()


@identity("operator-derivative", "t^k acting on p(x) is the k-th q-derivative")
def _operator_derivative(cfg):
    audit = Audit("operator-derivative")
    rng = _rng("operator-derivative")
    for ctx in cfg.contexts():
        for p in _sample_polys(rng, ctx, cfg, 4):
            for k in range(max(p.degree, 0) + 2):
                t_k = Series.monomial(ctx, k, max(p.degree, k))
                audit.record(ctx, operator_apply(t_k, p), q_derivative_power(p, k), n=p.degree, k=k, p=p)
    return audit.verdict()


@identity("derivative-at-zero", "(D_q^k p)(0) = <t^k | p> = <1 | D_q^k p>")
def _derivative_at_zero(cfg):
    audit = Audit("derivative-at-zero")
    rng = _rng("derivative-at-zero")
    for ctx in cfg.contexts():
        for p in _sample_polys(rng, ctx, cfg, 4):
            d = max(p.degree, 0)
            for k in range(d + 2):
                dk = q_derivative_power(p, k)
                value = eval_poly(dk, 0)
                audit.record(ctx, value, apply(Series.monomial(ctx, k, max(d, k)), p), n=p.degree, k=k, p=p)
                audit.record(ctx, value, apply(Series.one(ctx, d), dk), n=p.degree, k=k, p=p)
    return audit.verdict()


# -- Appell layer -------------------------------------------------------------------


def _orthonormality(audit, ctx, fam, nmax, variant=None, low=0):
    g = fam.g_series(nmax + fam.det_valuation)
    for n in range(low, nmax + 1):
        a_n = fam.polynomial(n)
        for k in range(low, nmax + 1):
            expected = ctx.factorial(n) if n == k else Fraction(0)
            audit.record(ctx, apply(g.shift(k), a_n), expected, variant=variant, n=n, k=k, family=fam.name)


@identity("sheffer-orthonormality", "<g(t) t^k | A_n(x)> = [n]_q! delta(n, k) for g = 1/A")
def _sheffer(cfg):
    audit = Audit("sheffer-orthonormality", ("bernoulli", "euler", "genocchi"))
    for ctx in cfg.contexts():
        for fam in _families(ctx, cfg, orders=False):
            _orthonormality(audit, ctx, fam, cfg.nmax, variant=fam.name)
    return audit.verdict()


@identity(
    "expansion-theorem-functional",
    "h(t) = sum_k <h | A_k> / [k]! g(t) t^k through t^nmax",
)
def _expansion_theorem_functional(cfg):
    audit = Audit("expansion-theorem-functional", _family_names(cfg, orders=False))
    rng = _rng("expansion-theorem-functional")
    for ctx in cfg.contexts():
        N = cfg.nmax
        hs = [
            e_q_series(ctx, N),
            Series.monomial(ctx, 1, N),
            Series.one(ctx, N),
            random_series(rng, ctx, N),
        ]
        for fam in _families(ctx, cfg, orders=False):
            for h in hs:
                audit.record(ctx, *functional_expansion_sides(fam, h, N), variant=fam.name, n=N, h=h)
    return audit.verdict()


@identity(
    "expansion-theorem-polynomial",
    "p(x) = sum_(k=0..deg p) <g(t) t^k | p> / [k]! A_k(x)",
)
def _expansion_theorem_polynomial(cfg):
    audit = Audit("expansion-theorem-polynomial", _family_names(cfg, orders=False))
    rng = _rng("expansion-theorem-polynomial")
    for ctx in cfg.contexts():
        polys = _sample_polys(rng, ctx, cfg, 5)
        for fam in _families(ctx, cfg, orders=False):
            for p in polys:
                _, rebuilt = expansion_sides(fam, p)
                audit.record(ctx, rebuilt, p, variant=fam.name, n=p.degree, p=p)
    return audit.verdict()


@identity("appell-equivalent-c", "(1/g)(t) e_q(x t) generates A_n(x) t^n / [n]!, with 1/g formed by inverting g")
def _equivalent_c(cfg):
    audit = Audit("appell-equivalent-c", _family_names(cfg))
    rng = _rng("appell-equivalent-c")
    for ctx in cfg.contexts():
        N = cfg.nmax
        for fam in _families(ctx, cfg):
            x0 = random_rational(rng)
            inv_g = fam.g_series(N).invert().truncate(N)
            lhs = Series(ctx, [fam.polynomial(n)(x0) / ctx.factorial(n) for n in range(N + 1)], N)
            audit.record(ctx, lhs, (inv_g * e_q_series(ctx, N).scale(x0)).truncate(N), variant=fam.name, n=N, x=x0)
    return audit.verdict()


@identity("appell-equivalent-d", "A_n(x) = sum_k [n,k] <1/g | x^(n-k)> x^k, with 1/g formed by inverting g")
def _equivalent_d(cfg):
    audit = Audit("appell-equivalent-d", _family_names(cfg))
    for ctx in cfg.contexts():
        for fam in _families(ctx, cfg):
            for n in range(cfg.nmax + 1):
                audit.record(ctx, polynomial_from_inverse(fam, n)[0], fam.polynomial(n), variant=fam.name, n=n, m=fam.order)
    return audit.verdict()


@identity("appell-equivalent-e", "A_n(x) = (1/g)(t) x^n, with 1/g formed by inverting g")
def _equivalent_e(cfg):
    audit = Audit("appell-equivalent-e", _family_names(cfg))
    for ctx in cfg.contexts():
        for fam in _families(ctx, cfg):
            for n in range(cfg.nmax + 1):
                audit.record(ctx, polynomial_from_inverse(fam, n)[1], fam.polynomial(n), variant=fam.name, n=n, m=fam.order)
    return audit.verdict()


@identity(
    "recurrence",
    "A_(n+1)(qx) from A_n(x): statement form, proof form, and the coefficient-comparison form",
)
def _recurrence(cfg):
    audit = Audit("recurrence", RECURRENCE_VARIANTS)
    for ctx in cfg.contexts():
        for name in ("bernoulli", "euler"):
            fam = geno._family_for(ctx, name)
            for n in range(min(cfg.nmax, 8) + 1):
                for variant, (lhs, rhs) in recurrence_sides(fam, n).items():
                    audit.record(ctx, lhs, rhs, variant=variant, n=n, family=name)
    return audit.verdict()


# -- Genocchi -----------------------------------------------------------------------


@identity(
    "genocchi-delta",
    "<(e_q+1)/(2t) t^k | G_n> = [n]! delta(n, k): claimed for all n, k >= 0, also checked on n, k >= 1",
)
def _genocchi_delta(cfg):
    audit = Audit("genocchi-delta", ("all-indices", "positive-indices"))
    for ctx in cfg.contexts():
        fam = geno._family_for(ctx, "genocchi")
        _orthonormality(audit, ctx, fam, cfg.nmax, variant="all-indices")
        _orthonormality(audit, ctx, fam, cfg.nmax, variant="positive-indices", low=1)
    return audit.verdict()


@identity("genocchi-derivative", "D_q G_n(x) = [n]_q G_(n-1)(x)")
def _genocchi_derivative(cfg):
    audit = Audit("genocchi-derivative")
    for ctx in cfg.contexts():
        fam = geno._family_for(ctx, "genocchi")
        for n in range(1, cfg.nmax + 1):
            audit.record(ctx, q_derivative_poly(fam.polynomial(n)), fam.polynomial(n - 1) * ctx.number(n), n=n)
    return audit.verdict()


@identity("genocchi-convolution", "G_n(x) = sum_k [n,k] <2t/(e_q+1) | x^(n-k)> x^k")
def _genocchi_convolution(cfg):
    audit = Audit("genocchi-convolution")
    for ctx in cfg.contexts():
        fam = geno._family_for(ctx, "genocchi")
        det = fam.det_series(cfg.nmax)
        for n in range(cfg.nmax + 1):
            built = Poly(ctx, [ctx.binomial(n, k) * apply(det, Poly.monomial(ctx, n - k)) for k in range(n + 1)])
            audit.record(ctx, built, fam.polynomial(n), n=n)
    return audit.verdict()


@identity("genocchi-operator-form", "G_n(x) = (2t/(e_q+1)) x^n as an operator")
def _genocchi_operator(cfg):
    audit = Audit("genocchi-operator-form")
    for ctx in cfg.contexts():
        fam = geno._family_for(ctx, "genocchi")
        det = fam.det_series(cfg.nmax)
        for n in range(cfg.nmax + 1):
            audit.record(ctx, operator_apply(det, Poly.monomial(ctx, n)), fam.polynomial(n), n=n)
    return audit.verdict()


def genocchi_shift_recurrence_sides(ctx: QContext, n: int) -> tuple[Poly, Poly]:
    """``G_(n+1)(qx)`` against ``[qx - q^(n-1) (e_q(t)(t-1)+1)/(2t^2)] G_n(x)``."""
    fam = geno._family_for(ctx, "genocchi")
    q = ctx.q
    g_n = fam.polynomial(n)
    N = max(g_n.degree, 0)
    e = e_q_series(ctx, N + 2)
    kernel = (e * Series(ctx, [-1, 1], N + 3) + 1).shift(-2).scalar(Fraction(1, 2))
    rhs = g_n.shift_degree(1) * q - operator_apply(kernel, g_n) * q ** (n - 1)
    return fam.polynomial(n + 1).scale_argument(q), rhs


@identity("genocchi-shift-recurrence", "G_(n+1)(qx) = [qx - q^(n-1) (e_q(t)(t-1)+1)/(2t^2)] G_n(x)")
def _genocchi_recurrence(cfg):
    audit = Audit("genocchi-shift-recurrence")
    for ctx in cfg.contexts():
        for n in range(min(cfg.nmax, 8) + 1):
            audit.record(ctx, *genocchi_shift_recurrence_sides(ctx, n), n=n)
    return audit.verdict()


@identity(
    "genocchi-number-recurrence",
    "G_0 = 1 and sum_(k=1..n) [n+1,k+1] G_(n-k) = -[n+1](1 + G_n), with G_n from the generating function",
)
def _genocchi_number_recurrence(cfg):
    audit = Audit("genocchi-number-recurrence", ("g0-claim", "printed"))
    for ctx in cfg.contexts():
        geno.audit_number_recurrence(ctx, max(cfg.nmax, 1), audit)
    return audit.verdict()


@identity(
    "genint-closed-form",
    "<(e_q+1)/(2t) | p> against (int_0^1 p + p(0))/2 (printed) and int_0^1 p / 2",
)
def _genint(cfg):
    audit = Audit("genint-closed-form", ("printed", "without-p0"))
    rng = _rng("genint-closed-form")
    for ctx in cfg.contexts():
        for p in _sample_polys(rng, ctx, cfg, 5):
            geno.genocchi_pairing_closed_form(p, audit)
    return audit.verdict()


@identity(
    "genocchi-integral-convolution",
    "int_0^1 G_n(x) d_qx = sum_k [n,k] G_(n-k) / [k+1]_q",
)
def _genocchi_integral_convolution(cfg):
    audit = Audit("genocchi-integral-convolution")
    for ctx in cfg.contexts():
        for n in range(cfg.nmax + 1):
            audit.record(ctx, *geno.integral_convolution_sides(ctx, n), n=n)
    return audit.verdict()


@identity("genocchi-integral-identity", "(int_0^1 G_n + G_n(0)) / 2 = [n]! delta(n, 0)")
def _genocchi_integral_identity(cfg):
    audit = Audit("genocchi-integral-identity")
    for ctx in cfg.contexts():
        for n in range(cfg.nmax + 1):
            audit.record(ctx, *geno.g_pairing_identity_sides(ctx, n), n=n)
    return audit.verdict()


@identity(
    "genocchi-integral-expansion",
    "p = 1/2 sum_(k=0..deg p) G_k/[k]! (int_0^1 D^k p + (D^k p)(0)); also without the (D^k p)(0) term",
)
def _genocchi_integral_expansion(cfg):
    audit = Audit("genocchi-integral-expansion", ("printed", "without-p0"))
    rng = _rng("genocchi-integral-expansion")
    for ctx in cfg.contexts():
        for p in _sample_polys(rng, ctx, cfg, 3):
            for variant, (lhs, rhs) in geno.integral_expansion_sides(p).items():
                audit.record(ctx, lhs, rhs, variant=variant, n=p.degree, p=p)
    return audit.verdict()


def _xm1(cfg):
    results = [geno.audit_xminus1_expansion(ctx, max(cfg.nmax, 1), cfg.mmax) for ctx in cfg.contexts()]
    return [list(r) for r in zip(*results)]


@identity("xm1-pairing", "<e_q(t) t^k | (x-1)_q^n> = [n]! delta(n, k)")
def _xm1_pairing(cfg):
    from .verdict import merge

    return merge(_xm1_cached(cfg)[0])


@identity(
    "xm1-genocchi-expansion",
    "G_n(x) = sum_k [n,k] G_(n-k)(1) (x-1)_q^e with the printed exponent e = n and with e = k",
)
def _xm1_expansion(cfg):
    from .verdict import merge

    return merge(_xm1_cached(cfg)[1])


@identity(
    "xm1-genocchi-closed-form",
    "closed form of (x-1)_q^n over G_k with the unbound 1/[m+1]_q (m over 1..mmax) and with 1/[l+1]_q",
)
def _xm1_closed(cfg):
    from .verdict import merge

    return merge(_xm1_cached(cfg)[2])


@lru_cache(maxsize=8)
def _xm1_cached(cfg):
    return _xm1(cfg)


@identity(
    "xm1-monomial-expansion",
    "(x-1)_q^n = sum_l (-1)^(n-l) q^(l(l-1)/2) x^l as printed, with [n,l]_q inserted, "
    "and as derived from the q-binomial formula",
)
def _xm1_monomial(cfg):
    audit = Audit("xm1-monomial-expansion", ("printed", "with-q-binomial", "from-binomial-formula"))
    for ctx in cfg.contexts():
        for n in range(cfg.nmax + 1):
            for variant, (lhs, rhs) in geno.xm1_monomial_sides(ctx, n).items():
                audit.record(ctx, lhs, rhs, variant=variant, n=n)
    return audit.verdict()


@identity(
    "coefficient-theorem",
    "Genocchi-basis coefficients of p: printed integral form, <(e_q+1)/(2t) | D^k p>/[k]!, and shifted pairing",
)
def _coefficient_theorem(cfg):
    audit = Audit("coefficient-theorem", geno.COEFFICIENT_VARIANTS)
    rng = _rng("coefficient-theorem")
    for ctx in cfg.contexts():
        for p in _sample_polys(rng, ctx, cfg, 3):
            for variant, (lhs, rhs) in geno.coefficient_theorem_sides(p).items():
                audit.record(ctx, lhs, rhs, variant=variant, n=p.degree, p=p)
    return audit.verdict()


# -- higher order ---------------------------------------------------------------------


@identity(
    "genocchi-order-multinomial",
    "G^[m]_n = sum over i_1+..+i_m = n of [n; i_1..i_m]_q G_(i_1)...G_(i_m)",
)
def _order_multinomial(cfg):
    audit = Audit("genocchi-order-multinomial")
    for ctx in cfg.contexts():
        for m in range(1, cfg.mmax + 1):
            for n in range(cfg.nmax + 1):
                audit.record(ctx, *geno.higher_order_number_sides(ctx, n, m), n=n, m=m)
    return audit.verdict()


@identity(
    "genocchi-order-delta",
    "<((e_q+1)/(2t))^m t^k | G^[m]_n> = [n]! delta(n, k): claimed for all n, k >= 0, also checked on n, k >= m",
)
def _order_delta(cfg):
    audit = Audit("genocchi-order-delta", ("all-indices", "indices-at-least-m"))
    for ctx in cfg.contexts():
        for m in range(1, cfg.mmax + 1):
            fam = geno._family_for(ctx, "genocchi" if m == 1 else f"genocchi^{m}")
            for n in range(cfg.nmax + 1):
                a_n = fam.polynomial(n)
                for k in range(cfg.nmax + 1):
                    value = geno.order_m_pairing(ctx, m, k, a_n)
                    expected = ctx.factorial(n) if n == k else Fraction(0)
                    audit.record(ctx, value, expected, variant="all-indices", n=n, m=m, k=k)
                    if n >= m and k >= m:
                        audit.record(ctx, value, expected, variant="indices-at-least-m", n=n, m=m, k=k)
    return audit.verdict()


@identity(
    "genocchi-order-reduction",
    "G^[m]_n(x) = 2^-(m-1) sum_k [n,k] G^[m-1]_(n-k) G_k(x) as printed, and without the power of 2",
)
def _order_reduction(cfg):
    audit = Audit("genocchi-order-reduction", ("printed", "corrected"))
    for ctx in cfg.contexts():
        for m in range(1, cfg.mmax + 1):
            for n in range(cfg.nmax + 1):
                geno.audit_order_reduction(ctx, n, m, audit)
    return audit.verdict()


@identity(
    "order-m-pairing-expansion",
    "p = sum_k <((e_q+1)/(2t))^m t^k | p> / [k]! G^[m]_k(x) over k = 0..deg p (printed) and k = m..deg p + m",
)
def _order_m_pairing_expansion(cfg):
    audit = Audit("order-m-pairing-expansion", ("printed-range", "shifted-range"))
    rng = _rng("order-m-pairing-expansion")
    for ctx in cfg.contexts():
        polys = _sample_polys(rng, ctx, cfg, 3)
        for m in range(1, cfg.mmax + 1):
            fam = geno._family_for(ctx, "genocchi" if m == 1 else f"genocchi^{m}")
            for p in polys:
                d = max(p.degree, 0)
                for variant, indices in (("printed-range", range(d + 1)), ("shifted-range", range(m, d + m + 1))):
                    rebuilt = geno.combine(
                        ctx,
                        [fam.polynomial(k) for k in indices],
                        [geno.order_m_pairing(ctx, m, k, p) / ctx.factorial(k) for k in indices],
                    )
                    audit.record(ctx, rebuilt, p, variant=variant, n=p.degree, m=m, p=p)
    return audit.verdict()


@identity(
    "genocchi-order-m-closed-form",
    "two-branch closed form expanding G_n(x) over G^[m]_k(x), k = 0..n; printed and with ordinary binomial weights",
)
def _order_m_closed_form(cfg):
    audit = Audit("genocchi-order-m-closed-form", geno.CLOSED_FORM_VARIANTS)
    for ctx in cfg.contexts():
        fam = geno._family_for(ctx, "genocchi")
        for m in range(1, cfg.mmax + 1):
            for n in range(min(cfg.nmax, 8) + 1):
                for variant, (lhs, rhs) in geno.order_m_closed_form_sides(fam, n, m).items():
                    audit.record(ctx, lhs, rhs, variant=variant, n=n, m=m)
    return audit.verdict()


@identity(
    "appell-order-m-closed-form",
    "the same closed form with A_n numbers, expanding Bernoulli and Euler polynomials over G^[m]_k(x)",
)
def _appell_order_m_closed_form(cfg):
    audit = Audit("appell-order-m-closed-form", geno.CLOSED_FORM_VARIANTS)
    for ctx in cfg.contexts():
        for name in ("bernoulli", "euler"):
            fam = geno._family_for(ctx, name)
            for m in range(1, cfg.mmax + 1):
                for n in range(min(cfg.nmax, 6) + 1):
                    for variant, (lhs, rhs) in geno.order_m_closed_form_sides(fam, n, m).items():
                        audit.record(ctx, lhs, rhs, variant=variant, n=n, m=m, family=name)
    return audit.verdict()
