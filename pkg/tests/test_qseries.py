import math
from fractions import Fraction
from importlib import resources

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qproj.laurent import ONE, Q, LaurentPoly
from qproj.qrat import quantize
from qproj.qseries import (
    CFDigitStream,
    InsufficientDigits,
    QSeries,
    ZeroLeading,
    decode_cf,
    decode_result,
    gap_bound,
    left_right_gap,
    mobius_series,
    quantize_real,
    taylor,
    taylor_raw,
)
from qproj.verify import PI_INV_COEFFS, pi_inverse_series

from .conftest import P, polys, rationals


def series(text, prec):
    return QSeries.from_poly(P(text), prec)


def test_taylor_7_5():
    s = taylor(quantize(Fraction(7, 5), "sharp"), 6)
    # (1 + q + 2q^2 + 2q^3 + q^4)/(1 + q + 2q^2 + q^3) = 1 + q^3 + ...
    assert s.coeff(0) == 1 and s.coeff(1) == 0 and s.coeff(2) == 0 and s.coeff(3) == 1
    assert s.prec == 6


def test_precision_propagation():
    a = series("1 + q", 5)
    b = series("q^2", 3)
    assert (a * b).prec == 3  # min(5 + 2, 3 + 0)
    assert (a + b).prec == 3
    assert series("q + q^2", 6).invert().prec == 4


def test_exact_series_needs_precision_to_invert():
    with pytest.raises(ValueError):
        QSeries.from_poly(ONE + Q).invert()
    with pytest.raises(ZeroLeading):
        QSeries.zero(5).invert()


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_series_arithmetic_matches_polynomials(a, b):
    A, B = QSeries.from_poly(a, 20), QSeries.from_poly(b, 20)
    assert (A + B) == QSeries.from_poly(a + b)
    assert (A * B) == QSeries.from_poly(a * b)


@given(polys)
@settings(max_examples=60, deadline=None)
def test_inverse(a):
    if not a:
        return
    A = QSeries.from_poly(a, 15)
    prod = A * A.invert()
    assert prod == QSeries.from_poly(ONE)


@given(polys)
def test_json_roundtrip(a):
    s = QSeries.from_poly(a, 12)
    assert QSeries.from_json(s.to_json()).to_json() == s.to_json()


def test_str_shows_order():
    assert str(series("1 + q", 4)) == "1 + q + O(q^4)"


def test_taylor_raw_negative_valuation():
    s = taylor_raw(P("1"), P("q^2 + q^3"), 3)
    assert s.valuation == -2 and s.coeff(-2) == 1 and s.coeff(-1) == -1


def test_digit_stream_parsing():
    s = CFDigitStream.parse("3;7,15,1,292")
    assert s.prefix(10) == [3, 7, 15, 1, 292]
    assert CFDigitStream.parse("1;2,2...").irrational
    with pytest.raises(ValueError):
        CFDigitStream.finite([1, 0]).prefix(2)


def _mp_digits(x, n):
    out = []
    for _ in range(n):
        a = int(mpmath.floor(x))
        out.append(a)
        x = 1 / (x - a)
    return out


def test_shipped_pi_digits_match_oracle():
    mpmath.mp.dps = 120
    path = resources.files("qproj").joinpath("data/pi_cf.txt")
    ds = CFDigitStream.from_file(path).prefix(100)
    assert len(ds) >= 40
    assert ds == _mp_digits(mpmath.pi, len(ds))


def test_pi_series_prefix():
    path = resources.files("qproj").joinpath("data/pi_cf.txt")
    rep = quantize_real(CFDigitStream.from_file(path), 33, return_report=True)
    assert rep.series.coeff(0) == 1 and rep.series.coeff(1) == 1 and rep.series.coeff(2) == 1
    assert rep.bound > 33
    assert rep.series.is_integral()


def test_one_over_pi_golden():
    s = pi_inverse_series()
    for e in range(31):
        assert s.coeff(e) == PI_INV_COEFFS.get(e, 0), e


def test_sqrt2_stream_stabilizes():
    s = CFDigitStream.periodic([1], [2])
    a = quantize_real(s, 20)
    b = quantize_real(CFDigitStream.periodic([1], [2]), 30)
    assert a == b.truncate(20)


def test_irrational_stream_that_ends():
    with pytest.raises(InsufficientDigits):
        quantize_real(CFDigitStream.parse("1;2,2,2..."), 20)


def test_finite_stream_is_exact_rational():
    s = quantize_real(CFDigitStream.finite([1, 2, 2]), 12)
    assert s == taylor(quantize(Fraction(7, 5), "sharp"), 12)


@given(rationals)
@settings(max_examples=60, deadline=None)
def test_gap_valuation_at_least_bound(x):
    rep = left_right_gap(x, 40)
    assert rep.ok


def test_gap_bound_value():
    assert gap_bound([1, 2, 2]) == 4
    assert left_right_gap(Fraction(7, 5), 20).valuation == 4


def test_mobius_series_matches_rational_action():
    x = Fraction(7, 5)
    s = taylor(quantize(x, "sharp"), 20)
    got = mobius_series("R^2 S", s)
    want = taylor(quantize(2 - 1 / x, "sharp"), 20)
    n = min(got.prec, want.prec)
    assert got.truncate(n) == want.truncate(n)


@pytest.mark.parametrize("x,digits", [(Fraction(7, 5), [1, 2, 2]), (Fraction(-7, 5), [-2, 1, 1, 2]),
                                      (Fraction(3, 17), [0, 5, 1, 2]), (Fraction(13, 4), [3, 4])])
def test_decode_rationals(x, digits):
    s = taylor(quantize(x, "sharp"), 20)
    got, exact = decode_result(s)
    assert got == digits and exact


def test_decode_sqrt2():
    s = quantize_real(CFDigitStream.periodic([1], [2]), 20)
    ds = decode_cf(s)
    assert ds[0] == 1 and set(ds[1:]) == {2}


def test_decode_golden_ratio_prefix():
    s = quantize_real(CFDigitStream.periodic([1], [1]), 20)
    ds = decode_cf(s)
    assert set(ds[:-1]) == {1}
