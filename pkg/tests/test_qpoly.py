from fractions import Fraction

import pytest

from qumbral.errors import ContextMismatch
from qumbral.qcore import QContext
from qumbral.qpoly import (
    Poly,
    eval_poly,
    jackson_antiderivative,
    jackson_integral,
    jackson_partial_sum,
    q_add_power,
    q_derivative_poly,
    q_derivative_power,
    x_minus_one_power,
)

F = Fraction


def test_zero_polynomial(half):
    z = Poly(half, [0, 0])
    assert z.is_zero and z.degree == -1 and eval_poly(z, 5) == 0
    assert str(z) == "0"


def test_arithmetic(half):
    p = Poly(half, [1, 2])
    q = Poly(half, [-1, 0, 3])
    assert p * q == Poly(half, [-1, -2, 3, 6])
    assert p + q - p == q
    with pytest.raises(ContextMismatch):
        p + Poly(QContext(F(1, 3)), [1])


def test_q_derivative_examples(half):
    assert q_derivative_poly(Poly.monomial(half, 3)) == Poly.monomial(half, 2, half.number(3))
    assert q_derivative_poly(Poly.constant(half, 5)).is_zero
    assert q_derivative_poly(Poly.monomial(half, 2)) == Poly.monomial(half, 1, F(3, 2))


def test_q_derivative_is_difference_quotient():
    for q in (F(1, 3), F(2, 3), F(9, 10)):
        ctx = QContext(q)
        p = Poly(ctx, [F(2), F(-1, 3), 0, F(5, 4), 1])
        for z in (F(1), F(-2, 3), F(7, 2)):
            quotient = (eval_poly(p, q * z) - eval_poly(p, z)) / ((q - 1) * z)
            assert eval_poly(q_derivative_poly(p), z) == quotient


def test_q_derivative_power(half):
    p = Poly(half, [1, 1, 1, 1])
    assert q_derivative_power(p, 2) == q_derivative_poly(q_derivative_poly(p))
    assert q_derivative_power(p, 0) == p
    assert q_derivative_power(p, 4).is_zero


def test_jackson_fundamental_theorem(ctx):
    p = Poly(ctx, [F(1, 2), -3, F(2, 5), 0, 7])
    assert q_derivative_poly(jackson_antiderivative(p)) == p
    assert jackson_integral(p, 0, 1) == eval_poly(jackson_antiderivative(p), 1)


def test_jackson_partial_sum_converges_to_closed_form(half):
    # int_0^1 x d_qx = 1/[2]_q = 2/3; the partial sums are exactly 2/3 (1 - 4^-T)
    x = Poly.monomial(half, 1)
    assert jackson_integral(x, 0, 1) == F(2, 3)
    for T in (1, 5, 20):
        assert jackson_partial_sum(x, 1, T) == F(2, 3) * (1 - F(1, 4) ** T)
    with pytest.raises(ValueError):
        jackson_partial_sum(Poly.monomial(QContext(1), 1), 1, 3)


def test_q_add_power_examples(ctx):
    q = ctx.q
    assert q_add_power(ctx, 0, 3) == Poly.constant(ctx, 1)
    assert q_add_power(ctx, 1, 3) == Poly(ctx, [3, 1])
    assert q_add_power(ctx, 2, -1) == Poly(ctx, [q, -(1 + q), 1])
    assert eval_poly(x_minus_one_power(ctx, 2), 1) == 0


def test_q_add_power_is_product():
    # (x + y)_q^n = prod_{j<n} (x + q^j y)
    ctx = QContext(F(2, 3))
    y = F(-3, 2)
    prod = Poly.constant(ctx, 1)
    for n in range(7):
        assert q_add_power(ctx, n, y) == prod
        prod = prod * Poly(ctx, [ctx.q**n * y, 1])


def test_scale_argument(half):
    p = Poly(half, [1, 2, 3])
    assert p.scale_argument(F(1, 2)) == Poly(half, [1, 1, F(3, 4)])
    assert p.shift_degree(2) == Poly(half, [0, 0, 1, 2, 3])


def test_format(half):
    assert str(Poly(half, [F(-3, 4), F(3, 2)])) == "3/2*x^1 - 3/4"
