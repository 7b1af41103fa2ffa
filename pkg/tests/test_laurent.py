from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qproj.laurent import ONE, Q, QINV, T, ZERO, LambdaUnit, LaurentPoly, NotDivisible, gcd, parse, render

from .conftest import P, polys


def test_render_increasing_order():
    assert render(P("1 + q + 2q^2")) == "1 + q + 2q^2"
    assert render(LaurentPoly((1, -1, 1))) == "1 - q + q^2"
    assert render(ZERO) == "0"


def test_render_pure_negative_powers():
    p = -QINV - QINV**2 - QINV**4
    assert render(p) == "-q^-1 - q^-2 - q^-4"


@given(polys)
def test_parse_render_roundtrip(p):
    assert parse(render(p)) == p


@given(polys)
def test_json_roundtrip(p):
    assert LaurentPoly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_exact_division(a, b):
    if not b:
        return
    assert (a * b).div_exact(b) == a


def test_not_divisible():
    with pytest.raises(NotDivisible):
        (ONE + Q + Q * Q).div_exact(ONE + Q)


def test_q_integers():
    assert LaurentPoly.q_int(4) == P("1 + q + q^2 + q^3")
    assert LaurentPoly.q_int(4).eval_at_one() == 4


def test_reverse_and_palindrome():
    p = P("q + 2q^2 + q^3")
    assert p.reverse() == P("q^-1 + 2q^-2 + q^-3")
    ok, center = p.is_palindromic()
    assert ok and center == 2
    assert not P("1 + 2q").is_palindromic()[0]


def test_evaluation_exact():
    assert P("1 + q^-1")(2) == Fraction(3, 2)


def test_gcd():
    a = T * (ONE + Q)
    b = T * (ONE - Q)
    g = gcd(a, b)
    assert g == T or g == -T


def test_strip_factor():
    k, rest = (T**3 * (ONE + Q)).strip_factor(T)
    assert k == 3 and rest == ONE + Q


@given(st.integers(-1, 1).filter(bool), st.integers(-5, 5), st.integers(-3, 3))
def test_units_classify_and_invert(sign, a, b):
    u = LambdaUnit(sign, a, b)
    if b >= 0:
        assert LambdaUnit.of(u.as_poly()) == u
    assert (u * u.inverse()).is_one()


def test_unit_reverse_of_t():
    # t(1/q) = q^-2 t
    assert T.reverse() == T.shift(-2)
    assert LambdaUnit(1, 0, 1).reverse() == LambdaUnit(1, -2, 1)


def test_non_unit_rejected():
    with pytest.raises(ValueError):
        LambdaUnit.of(ONE + Q)
