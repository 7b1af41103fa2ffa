from fractions import Fraction

import pytest
from hypothesis import given, settings

from qproj.contfrac import (
    CFExpansion,
    ShapeMismatch,
    cf_to_word,
    euclid_digits,
    evaluate,
    factorization_shape,
    negative_cf,
    positive_cf,
)
from qproj.laurent import LambdaUnit
from qproj.qrat import quantize

from .conftest import rationals


def test_parity_rewrites():
    assert positive_cf(Fraction(7, 5), "even").digits == (1, 2, 1, 1)
    assert positive_cf(Fraction(7, 5), "odd").digits == (1, 2, 2)
    assert positive_cf(3, "even").digits == (2, 1)
    assert positive_cf(3, "odd").digits == (3,)


def test_negative_cf():
    cf = negative_cf(Fraction(7, 5))
    assert cf.digits == (2, 2, 3)
    assert evaluate(cf) == Fraction(7, 5)


def test_parse_and_str():
    assert CFExpansion.parse("1,2,2") == CFExpansion("positive", (1, 2, 2))
    assert CFExpansion.parse("neg:2,2,3").kind == "negative"
    assert str(CFExpansion.parse("neg:2,2,3")) == "[[2,2,3]]"
    with pytest.raises(ValueError):
        CFExpansion("negative", (2, 1))
    with pytest.raises(ValueError):
        CFExpansion("positive", (1, 0))


@given(rationals)
def test_expansions_evaluate_back(x):
    for parity in ("even", "odd"):
        cf = positive_cf(x, parity)
        assert evaluate(cf) == x
        assert len(cf.digits) % 2 == (0 if parity == "even" else 1)
    assert evaluate(negative_cf(x)) == x
    assert evaluate(CFExpansion("positive", euclid_digits(x))) == x


@given(rationals)
def test_word_acts_classically(x):
    cf = positive_cf(x, "even")
    assert cf_to_word(cf).act(float("inf")) == x


def test_shape_7_5_even():
    s = factorization_shape(CFExpansion("positive", (1, 2, 1, 1)))
    assert s.unit.tpow == 2
    assert s.value == quantize(Fraction(7, 5), "sharp").point
    assert s.convergent == quantize(Fraction(4, 3), "sharp").point  # [1,2,1]


def test_shape_7_5_odd():
    s = factorization_shape(CFExpansion("positive", (1, 2, 2)))
    assert s.unit == LambdaUnit(1, 0, 1)
    assert s.value == quantize(Fraction(7, 5), "flat").point


@given(rationals)
@settings(max_examples=60, deadline=None)
def test_shapes_hold_for_random_rationals(x):
    factorization_shape(positive_cf(x, "even"))
    cf = positive_cf(x, "odd")
    if len(cf.digits) >= 3:
        factorization_shape(cf)
    factorization_shape(negative_cf(x))


def test_odd_short_rejected():
    with pytest.raises(ValueError):
        factorization_shape(CFExpansion("positive", (3,)))


def test_shape_mismatch_is_an_assertion():
    assert issubclass(ShapeMismatch, AssertionError)
