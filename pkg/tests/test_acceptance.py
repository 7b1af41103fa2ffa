"""Acceptance criteria. Each test prints one PASS/FAIL line and enforces its time budget."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import gcd

from qproj import algebraic as A
from qproj.fenceposet import admissible_ideals, build, generating_function, normalized_trace, odd_shapes
from qproj.laurent import ONE, Q, QINV, LambdaUnit, LaurentPoly, parse
from qproj.projective import ProjPoint
from qproj.qgroup import QMatrix, check_presentation, generator, proj_equal, twisted, twisted_square_unit
from qproj.qrat import act, act_twisted, quantize
from qproj.qseries import CFDigitStream, QSeries, decode_cf, quantize_real, taylor
from qproj.qtrace import check_H_invariants, check_palindrome_det_neg, qtrace, render_trace
from qproj.verify import PI_INV_COEFFS, hj_tuples, pi_inverse_series, random_rational, random_word, random_word_det


@contextmanager
def criterion(capsys, number, title, budget):
    start = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= budget:
            detail = f" over budget {budget}s"
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s, budget {budget}s")
        status = "PASS"
    except AssertionError as exc:
        detail = detail or f" ({exc})"
        raise
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title} in {elapsed:.2f}s{detail}")


def pt(text):
    return ProjPoint.parse(text)


def test_criterion_1_golden_values(capsys):
    with criterion(capsys, 1, "golden values", 1.0):
        assert quantize(Fraction(7, 5), "sharp").point == pt("(1 + q + 2q^2 + 2q^3 + q^4)/(1 + q + 2q^2 + q^3)")
        assert quantize(Fraction(7, 5), "flat").point == pt("(1 + q + q^2 + 2q^3 + q^4 + q^5)/(1 + q + q^2 + q^3 + q^4)")
        assert quantize(Fraction(11, 3), "sharp").point == pt("(1 + 2q + 3q^2 + 2q^3 + 2q^4 + q^5)/(1 + q + q^2)")
        assert quantize(Fraction(3, 2), "flat").point == pt("(1 + q^2 + q^3)/(1 + q^2)")
        for n in range(1, 11):
            sharp = LaurentPoly.q_int(n)
            flat = LaurentPoly.q_int(n - 1) + LaurentPoly.monomial(n) if n > 1 else Q
            neg_flat = -sum((LaurentPoly.monomial(-k) for k in range(1, n)), LaurentPoly()) - LaurentPoly.monomial(-n - 1)
            assert quantize(n, "sharp").point == ProjPoint.make(sharp)
            assert quantize(n, "flat").point == ProjPoint.make(flat)
            assert quantize(-n, "flat").point == ProjPoint.make(neg_flat)
        assert generator("J").entries == (Q - ONE, ONE, Q, ONE - Q)
        assert generator("L").entries == (ONE, LaurentPoly(), ONE, QINV)
        assert generator("I").entries == (ONE, Q - ONE, ONE - Q, Q)
        Rbar = twisted("R")
        assert Rbar.twisted and Rbar.matrix.entries == (ONE, Q * Q, ONE - Q, Q)
        Nbar = twisted("N")
        assert Nbar.twisted and proj_equal(Nbar.matrix, QMatrix.of(((-1, 0), (0, Q))))
        T = parse("1 - q + q^2")
        assert Nbar.normalized().matrix.entries == (-ONE, LaurentPoly(), LaurentPoly(), Q) or proj_equal(
            Nbar.matrix, QMatrix.of(((-T, 0), (0, Q * T)))
        )


def test_criterion_2_presentation(capsys):
    with criterion(capsys, 2, "presentation relations", 1.0):
        R, S, N, J = (generator(x) for x in "RSNJ")
        I = QMatrix.identity()
        assert proj_equal(S @ S, I)
        assert proj_equal((R @ S) ** 3, I)
        units = check_presentation()
        t = LambdaUnit(1, 0, 1)
        # exact units with the displayed generators
        assert units["(NR)^2"] == t
        assert units["J^2"] == t
        assert units["N^2"] == LambdaUnit(1, -1, 1)
        assert units["(NS)^2"] == LambdaUnit(1, -2, 1)
        assert units["R^-1 J R J R^-1 / S"] == t
        assert units["J R J R^-1 J R / N"] == LambdaUnit(1, 1, 1)
        assert twisted_square_unit() == LambdaUnit(1, -1, 1)


def test_criterion_3_flavor_flip(capsys):
    with criterion(capsys, 3, "flavor-flip rule on 500 random pairs", 30.0):
        rng = random.Random(2024)
        for _ in range(500):
            w = random_word(rng)
            x = random_rational(rng, 20)
            for fl in ("sharp", "flat"):
                other = "flat" if fl == "sharp" else "sharp"
                X = quantize(x, fl)
                y = w.act(x)
                want = fl if w.det() == 1 else other
                assert act(w, X).point == quantize(y, want).point, (str(w), x, fl)
                want_t = other if w.det() == 1 else fl
                assert act_twisted(w, X).point == quantize(y, want_t).point, (str(w), x, fl, "twisted")


def test_criterion_4_traces(capsys):
    with criterion(capsys, 4, "trace suite", 60.0):
        assert render_trace(qtrace("N R^2 S R^2 S R^3 S")) == "-(1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6)"
        rng = random.Random(99)
        for _ in range(300):
            w = random_word_det(rng, -1)
            rep = check_palindrome_det_neg(w)
            assert rep.palindromic and rep.single_sign, str(w)
        for c in hj_tuples(4, 5):
            assert check_H_invariants(c).ok, c


def test_criterion_5_fence_posets(capsys):
    with criterion(capsys, 5, "fence posets, all odd shapes with sum <= 12", 30.0):
        ideals = [set(i) for i in admissible_ideals(build((1, 2, 2)))]
        assert ideals == [set(), {0}, {0, 3}, {2, 3}, {0, 2, 3}, {0, 1, 2, 3}, {0, 3, 4, 5},
                          {0, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}]
        shapes = odd_shapes(12)
        assert len(shapes) == 2036
        for s in shapes:
            assert generating_function(build(s)) == normalized_trace(s), s


def test_criterion_6_one_over_pi(capsys):
    with criterion(capsys, 6, "[1/pi]_q golden coefficients", 10.0):
        s = pi_inverse_series(order=33)
        assert s.prec >= 31
        for e in range(31):
            assert s.coeff(e) == PI_INV_COEFFS.get(e, 0), e


def _height_rationals(h):
    out = {Fraction(0)}
    for b in range(1, h + 1):
        for a in range(-h, h + 1):
            if gcd(a, b) == 1:
                out.add(Fraction(a, b))
    return sorted(out)


def test_criterion_7_injectivity_and_decoding(capsys):
    with criterion(capsys, 7, "injectivity at height 30 and decoding", 60.0):
        xs = _height_rationals(30)
        pts = {quantize(x, "sharp").point for x in xs}
        assert len(pts) == len(xs)
        sqrt2 = decode_cf(quantize_real(CFDigitStream.periodic([1], [2]), 20))
        assert sqrt2[0] == 1 and set(sqrt2[1:]) == {2}
        phi = decode_cf(quantize_real(CFDigitStream.periodic([1], [1]), 20))
        assert set(phi[:-1]) == {1}
        assert decode_cf(taylor(quantize(Fraction(7, 5), "sharp"), 20)) == [1, 2, 2]


def test_criterion_8_algebraic(capsys):
    with criterion(capsys, 8, "quantized Vieta relations", 300.0):
        for b in (5, 7, 12):
            rep = A.quantized_vieta_deg4(b, 20)
            assert rep.ok, (b, rep.failures())
        reps6 = {}
        for b in (1, 2, 3, 4):
            reps6[b] = A.quantized_vieta_deg6(b, 20)
            assert reps6[b].ok, (b, reps6[b].failures())
        for n in (3, 4, 5):
            for sign in "-+":
                rep = A.split_case_deg4(n, sign, 20)
                assert rep.ok, (n, sign, rep.failures())
        s1 = reps6[2].sigma[1].truncate(20)
        expected = QSeries.from_poly(parse("q + 2q^2 + 3q^3 + 2q^4 + q^5"), 20)
        assert s1 == expected, (
            f"degree-6 b=2 S1 is {s1}, expected closed form is {expected}; the computed value equals the sum of the "
            "roots of the quantized quadratic factors"
        )
