from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polynomials
from polylogid.errors import DivisionByZero, NotExpandable
from polylogid.exactmath import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    euler_derivative,
    format_poly,
    format_rf,
    poly_arith,
    poly_gcd,
    rf_arith,
    rf_series,
)

x = Polynomial.x()
one_minus_x = Polynomial((1, -1))


def om(n):
    return Polynomial.one_minus_x_power(n)


def test_poly_canonical_trailing_zeros():
    assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert Polynomial((0,)).coeffs == ()
    assert Polynomial().degree == -1


def test_poly_arith_examples():
    assert poly_arith("add", x, x * x) == Polynomial((0, 1, 1))
    assert poly_arith("mul", one_minus_x, one_minus_x) == Polynomial((1, -2, 1))
    assert poly_arith("mul", Polynomial((0, 1, 1)), Polynomial((1, -2, 1))) == Polynomial((0, 1, -1, -1, 1))
    assert poly_arith("scale", x, Fraction(1, 2)) == Polynomial((0, Fraction(1, 2)))
    assert poly_arith("sub", x, x).is_zero()


def test_divmod_and_gcd():
    p = Polynomial((1, -2, 1)) * Polynomial((3, 1))
    q, r = p.divmod(one_minus_x)
    assert r.is_zero()
    assert q * one_minus_x == p
    assert poly_gcd(p, om(3)) == Polynomial((-1, 1)).monic() * Polynomial((-1, 1))
    with pytest.raises(DivisionByZero):
        p.divmod(Polynomial())


def test_rf_arith_examples():
    li4 = RationalFunction(Polynomial((0, 1, 11, 11, 1)), om(5))
    li2 = RationalFunction(Polynomial((0, 1, 1)), om(3))
    expected = RationalFunction(Polynomial((0, 0, 12, 12)), om(5))
    assert rf_arith("sub", li4, li2) == expected
    f = RationalFunction(x, om(1))
    assert rf_arith("add", f, RationalFunction(0)) == f
    assert rf_arith("div", RationalFunction(x, om(2)), f) == RationalFunction(1, om(1))
    with pytest.raises(DivisionByZero):
        rf_arith("div", f, RationalFunction(0))


def test_rf_canonical_form_is_unique():
    a = RationalFunction(Polynomial((0, 2)) * (x + 3), Polynomial((4, -4)) * (x + 3))
    b = RationalFunction(Polynomial((0, -1)), Polynomial((-2, 2)))
    assert a == b
    assert a.den.leading == 1
    assert hash(a) == hash(b)
    assert RationalFunction(0) == RationalFunction(Polynomial(), om(4))


def test_rf_series_examples():
    assert rf_series(RationalFunction(x, om(2)), 4).coeffs == (0, 1, 2, 3, 4)
    assert rf_series(RationalFunction(Polynomial((0, 1, 1)), om(3)), 4).coeffs == (0, 1, 4, 9, 16)
    assert rf_series(RationalFunction(1, om(1)), 2).coeffs == (1, 1, 1)


def test_rf_series_not_expandable():
    with pytest.raises(NotExpandable):
        rf_series(RationalFunction(1, x), 3)


def test_euler_derivative_examples():
    assert euler_derivative(RationalFunction(x, om(1))) == RationalFunction(x, om(2))
    assert euler_derivative(RationalFunction(1)).is_zero()
    assert euler_derivative(RationalFunction(x, om(2))) == RationalFunction(x * (1 + x), om(3))


def test_evaluation_exact_and_float():
    f = RationalFunction(x * (1 + x), om(3))
    assert f(Fraction(1, 2)) == Fraction(3, 4) / Fraction(1, 8)
    assert f(0.5) == pytest.approx(6.0)


def test_formatting():
    assert format_poly(Polynomial((0, 1, 11, 11, 1))) == "x^4 + 11x^3 + 11x^2 + x"
    assert format_poly(Polynomial((2, Fraction(-1, 3)))) == "-(1/3)x + 2"
    assert format_rf(RationalFunction(x, om(1))) == "(x)/(1 - x)"
    assert format_rf(RationalFunction(1, x + 2)) == "(1)/(x + 2)"


def test_immutability():
    p = Polynomial((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = ()
    with pytest.raises(AttributeError):
        RationalFunction(p).num = p


def test_truncated_series_ops():
    s = TruncatedSeries([1, 1, 1], 2)
    assert (s * Polynomial((1, -1))).coeffs == (1, 0, 0)
    assert s.euler().coeffs == (0, 1, 2)
    assert len(TruncatedSeries([1], 3)) == 4
    with pytest.raises(ValueError):
        s + TruncatedSeries([1], 3)


rfs = st.tuples(polynomials(), polynomials(nonzero_constant=True)).map(lambda t: RationalFunction(*t))


@settings(max_examples=60, deadline=None)
@given(rfs, st.integers(0, 12))
def test_euler_derivative_scales_series(f, N):
    lhs = rf_series(euler_derivative(f), N)
    base = rf_series(f, N)
    assert lhs.coeffs == tuple(k * c for k, c in enumerate(base.coeffs))


@settings(max_examples=40, deadline=None)
@given(rfs, rfs, rfs)
def test_add_mul_associative_commutative(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials(nonzero_constant=True), st.integers(0, 12))
def test_series_round_trip(p, q, N):
    s = rf_series(RationalFunction(p, q), N)
    back = s * q
    assert back.coeffs == TruncatedSeries.from_polynomial(p, N).coeffs


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials())
def test_divmod_identity(p, q):
    if q.is_zero():
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.degree < q.degree
