from fractions import Fraction

import pytest

from qumbral.errors import TruncationError
from qumbral.qpoly import Poly, eval_poly, q_derivative_power
from qumbral.qseries import Series, e_q_series, series_from_list
from qumbral.umbral import (
    Functional,
    adjoint_sides,
    apply,
    check_adjoint,
    check_pairing_convolution,
    check_pairing_multinomial,
    convolution_sides,
    expand_functional,
    expand_polynomial,
    multinomial_sides,
    operator_apply,
    pair_monomial,
)

F = Fraction


def test_particular_pairing(ctx):
    for n in range(8):
        for k in range(8):
            expected = ctx.factorial(n) if n == k else 0
            assert pair_monomial(Series.monomial(ctx, k, 8), n) == expected


def test_evaluation_functional(ctx):
    p = Poly(ctx, [F(1, 2), -1, 0, F(4, 3)])
    for y in (F(2), F(-1, 3)):
        e = e_q_series(ctx, 3).scale(y)
        assert apply(Functional(e), p) == eval_poly(p, y)
        assert apply(e + 1, p) == eval_poly(p, y) + eval_poly(p, 0)
        assert apply(e - 1, p) == eval_poly(p, y) - eval_poly(p, 0)


def test_genocchi_g_on_monomials(ctx):
    # <(e_q+1)/(2t) | x^n> = 1 / (2 [n+1]_q)
    g = (e_q_series(ctx, 9) + 1).shift(-1).scalar(F(1, 2))
    for n in range(8):
        assert apply(g, Poly.monomial(ctx, n)) == 1 / (2 * ctx.number(n + 1))


def test_insufficient_truncation_is_an_error(half):
    with pytest.raises(TruncationError):
        apply(e_q_series(half, 2), Poly.monomial(half, 3))
    with pytest.raises(TruncationError):
        operator_apply(e_q_series(half, 2), Poly.monomial(half, 3))


def test_operator_examples(ctx):
    for n in range(6):
        x_n = Poly.monomial(ctx, n)
        t = Series.monomial(ctx, 1, n)
        assert operator_apply(t, x_n) == q_derivative_power(x_n, 1)
        t_inv = Series.monomial(ctx, -1, n)
        up = operator_apply(t_inv, x_n)
        assert up == Poly.monomial(ctx, n + 1, 1 / ctx.number(n + 1))
        assert operator_apply(Series.monomial(ctx, 1, n + 1), up) == x_n
        assert operator_apply(Series.one(ctx, n), x_n) == x_n


def test_operator_is_iterated_derivative(half):
    p = Poly(half, [3, 0, F(1, 2), -2, 1])
    for k in range(6):
        assert operator_apply(Series.monomial(half, k, max(k, 4)), p) == q_derivative_power(p, k)


def test_adjoint_examples(ctx):
    t = Series.monomial(ctx, 1, 4)
    x2 = Poly.monomial(ctx, 2)
    assert adjoint_sides(t, t, x2) == (ctx.factorial(2), ctx.factorial(2))
    f = e_q_series(ctx, 4)
    assert check_adjoint(f, Series.one(ctx, 4), Poly(ctx, [1, 2, 3]))


def test_adjoint_fails_for_laurent_outer(half):
    # f g = t pairs with x, but t^2 annihilates x before t^-1 can act
    f = Series.monomial(half, -1, 4)
    g = Series.monomial(half, 2, 4)
    assert adjoint_sides(f, g, Poly.monomial(half, 1)) == (1, 0)


def test_convolution_examples(ctx):
    e = e_q_series(ctx, 4)
    assert check_pairing_convolution(e, e, 2)
    assert check_pairing_convolution(e, Series.one(ctx, 4), 3)
    t, t2 = Series.monomial(ctx, 1, 4), Series.monomial(ctx, 2, 4)
    lhs, rhs = convolution_sides(t, t2, 3)
    assert lhs == rhs == ctx.binomial(3, 1) * ctx.factorial(1) * ctx.factorial(2)


def test_multinomial_examples(half):
    det = (e_q_series(half, 6) + 1).invert().scalar(2).shift(1)
    assert check_pairing_multinomial([det], 4)
    assert multinomial_sides([det, det], 4) == convolution_sides(det, det, 4)
    assert check_pairing_multinomial([det, det, det], 4)


def test_expansions(half):
    x3 = Poly.monomial(half, 3)
    assert expand_polynomial(x3) == x3
    e = e_q_series(half, 6)
    rebuilt = expand_functional(e, 6)
    assert [rebuilt.coeff(k) for k in range(7)] == [1 / half.factorial(k) for k in range(7)]
    f = series_from_list(half, [F(2), 0, F(-1, 3), 5])
    assert expand_functional(f, 3) == f
