"""Property-based checks of the algebraic laws the kernel relies on."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from qumbral.formatting import format_rational, parse_rational
from qumbral.qcore import QContext
from qumbral.qpoly import Poly, eval_poly, jackson_antiderivative, q_derivative_poly
from qumbral.qseries import Series, e_q_series
from qumbral.umbral import adjoint_sides, apply, convolution_sides, operator_apply

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
qs = st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(9, 10), Fraction(1)])


@st.composite
def contexts(draw):
    return QContext(draw(qs))


@st.composite
def polys(draw, ctx, max_degree=8):
    return Poly(ctx, draw(st.lists(small, min_size=1, max_size=max_degree + 1)))


@st.composite
def series(draw, ctx, truncation, valuation=st.integers(0, 2)):
    v = draw(valuation)
    coeffs = draw(st.lists(small, min_size=truncation - v + 1, max_size=truncation - v + 1))
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return Series(ctx, coeffs, truncation, start=v)


@given(st.data())
def test_series_ring_laws(data):
    ctx = data.draw(contexts())
    f, g, h = (data.draw(series(ctx, 8)) for _ in range(3))
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(st.data())
def test_inverse_round_trip(data):
    ctx = data.draw(contexts())
    f = data.draw(series(ctx, 16, valuation=st.integers(-2, 2)))
    assert (f * f.invert() - 1).is_zero


@given(st.data())
def test_q_leibniz_rule(data):
    # D_q(pr)(x) = D_q p(x) r(qx) + p(x) D_q r(x)
    ctx = data.draw(contexts())
    p, r = data.draw(polys(ctx, 5)), data.draw(polys(ctx, 5))
    rhs = q_derivative_poly(p) * r.scale_argument(ctx.q) + p * q_derivative_poly(r)
    assert q_derivative_poly(p * r) == rhs


@given(st.data())
def test_jackson_antiderivative_inverts_derivative(data):
    ctx = data.draw(contexts())
    p = data.draw(polys(ctx))
    assert q_derivative_poly(jackson_antiderivative(p)) == p
    assert jackson_antiderivative(q_derivative_poly(p)) == p - eval_poly(p, 0)


@given(st.data())
def test_pairing_laws(data):
    ctx = data.draw(contexts())
    p = data.draw(polys(ctx))
    d = max(p.degree, 0)
    f, g = data.draw(series(ctx, d + 2)), data.draw(series(ctx, d + 2))
    lhs, rhs = adjoint_sides(f, g, p)
    assert lhs == rhs
    for n in range(d + 1):
        a, b = convolution_sides(f, g, n)
        assert a == b


@given(st.data())
def test_evaluation_functional(data):
    ctx = data.draw(contexts())
    p = data.draw(polys(ctx))
    y = data.draw(small)
    assert apply(e_q_series(ctx, max(p.degree, 0)).scale(y), p) == eval_poly(p, y)


@given(st.data())
def test_operators_compose_like_products(data):
    # for power series (valuation >= 0) the operator action is multiplicative
    ctx = data.draw(contexts())
    p = data.draw(polys(ctx, 6))
    f, g = data.draw(series(ctx, 6)), data.draw(series(ctx, 6))
    assert operator_apply(f * g, p) == operator_apply(f, operator_apply(g, p))


@given(small)
def test_rational_text_round_trip(r):
    assert parse_rational(format_rational(r)) == r
