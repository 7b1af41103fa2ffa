from fractions import Fraction

import pytest
from hypothesis import given, settings

from qproj.laurent import ONE, Q, LaurentPoly
from qproj.projective import INFINITY, ProjPoint
from qproj.qgroup import GroupWord, eval_word, generator
from qproj.qrat import (
    INF_FLAT,
    INF_SHARP,
    QRational,
    act,
    act_twisted,
    flat_from_sharp,
    invert,
    minus_inverse_identity,
    negate,
    parse_value,
    q_integer,
    quantize,
    shift_identity,
)
from qproj.projective import mobius

from .conftest import P, rationals


def pt(text):
    return ProjPoint.parse(text)


def test_golden_7_5():
    assert quantize(Fraction(7, 5), "sharp").point == pt("(1 + q + 2q^2 + 2q^3 + q^4)/(1 + q + 2q^2 + q^3)")
    assert quantize(Fraction(7, 5), "flat").point == pt("(1 + q + q^2 + 2q^3 + q^4 + q^5)/(1 + q + q^2 + q^3 + q^4)")
    assert str(quantize("7/5", "sharp")) == "(1 + q + 2q^2 + 2q^3 + q^4)/(1 + q + 2q^2 + q^3)"


def test_golden_11_3_and_3_2():
    assert quantize(Fraction(11, 3), "sharp").point == pt("(1 + 2q + 3q^2 + 2q^3 + 2q^4 + q^5)/(1 + q + q^2)")
    assert quantize(Fraction(3, 2), "flat").point == pt("(1 + q^2 + q^3)/(1 + q^2)")


def test_R3J_on_flat_3_2():
    M = eval_word(GroupWord.parse("R^3 J"))
    assert M.entries == (P("q + q^2 + q^4"), ONE, Q, ONE - Q)
    assert mobius(M, quantize(Fraction(3, 2), "flat").point) == quantize(Fraction(11, 3), "sharp").point


@pytest.mark.parametrize("n", range(1, 11))
def test_integers(n):
    sharp = LaurentPoly.q_int(n)
    flat = LaurentPoly.q_int(n - 1) + LaurentPoly.monomial(n) if n > 1 else Q
    assert quantize(n, "sharp").point == ProjPoint.make(sharp)
    assert quantize(n, "flat").point == ProjPoint.make(flat)
    assert q_integer(n, "sharp") == sharp and q_integer(n, "flat") == flat
    neg_flat = -sum((LaurentPoly.monomial(-k) for k in range(1, n)), LaurentPoly()) - LaurentPoly.monomial(-n - 1)
    assert quantize(-n, "flat").point == ProjPoint.make(neg_flat)
    neg_sharp = -sum((LaurentPoly.monomial(-k) for k in range(1, n + 1)), LaurentPoly())
    assert quantize(-n, "sharp").point == ProjPoint.make(neg_sharp)


def test_minus_three_flat_text():
    assert str(quantize(-3, "flat")) == "-q^-1 - q^-2 - q^-4"


def test_infinity():
    assert quantize("inf", "sharp").point == INF_SHARP
    assert quantize(INFINITY, "flat").point == INF_FLAT


def test_worked_examples():
    assert act("N", quantize(3, "sharp")).point == quantize(-3, "flat").point
    assert act("N", quantize(3, "flat")).point == quantize(-3, "sharp").point
    assert act_twisted("R", quantize(4, "sharp")).point == quantize(5, "flat").point
    assert act_twisted("J", quantize(Fraction(7, 5), "sharp")).point == quantize(Fraction(5, 7), "sharp").point


@given(rationals)
@settings(max_examples=80, deadline=None)
def test_specializes_at_one(x):
    for fl in ("sharp", "flat"):
        assert quantize(x, fl).point.eval_at_one() == x


@given(rationals)
@settings(max_examples=60, deadline=None)
def test_negate_and_invert(x):
    for fl in ("sharp", "flat"):
        X = quantize(x, fl)
        assert negate(X).point == quantize(-x, fl).point
        if x != 0:
            assert invert(X).point == quantize(1 / x, fl).point


@given(rationals)
@settings(max_examples=60, deadline=None)
def test_flat_from_sharp(x):
    assert flat_from_sharp(x).ok


def test_flat_from_sharp_examples():
    for x in (Fraction(7, 5), 3, Fraction(-5, 2), Fraction(1, 4), INFINITY):
        assert flat_from_sharp(x).ok


@given(rationals)
@settings(max_examples=60, deadline=None)
def test_shift_and_minus_inverse(x):
    assert shift_identity(x, "sharp") and shift_identity(x, "flat")
    if x != 0:
        assert minus_inverse_identity(x)


def test_json_roundtrip():
    X = quantize(Fraction(7, 5), "flat")
    assert QRational.from_json(X.to_json()) == X


def test_parse_value():
    assert parse_value("7/5") == Fraction(7, 5)
    assert parse_value("inf") == INFINITY
    with pytest.raises(ValueError):
        quantize(1, "round")
