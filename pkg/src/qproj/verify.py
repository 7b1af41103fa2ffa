"""Built-in property suites behind ``qproj verify``.

Each suite returns {"ok", "checked", "failures"}; failures carry counterexamples.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .laurent import LambdaUnit
from .qgroup import GroupWord, check_presentation, twisted_square_unit

SUITES = ("actions", "palindromes", "posets", "relations", "series", "vieta")

#: the first 30 coefficients of [1/pi]_q (exponents 0..30)
PI_INV_COEFFS = {
    3: 1, 5: -1, 6: -1, 7: 1, 8: 2, 10: -4, 11: -1, 12: 5, 13: 5, 14: -6, 15: -11,
    16: 3, 17: 20, 18: 6, 19: -28, 20: -26, 21: 31, 22: 58, 23: -17, 24: -103,
    25: -28, 26: 146, 27: 131, 28: -165, 29: -299, 30: 94,
}

#: exact units of the defining relations on the displayed generators
PRESENTATION_UNITS = {
    "S^2": LambdaUnit(-1, -1, 0),
    "(RS)^3": LambdaUnit(-1, 0, 0),
    "N^2": LambdaUnit(1, -1, 1),
    "(NR)^2": LambdaUnit(1, 0, 1),
    "(NS)^2": LambdaUnit(1, -2, 1),
    "J^2": LambdaUnit(1, 0, 1),
    "R^-1 J R J R^-1 / S": LambdaUnit(1, 0, 1),
    "J R J R^-1 J R / N": LambdaUnit(1, 1, 1),
}

LETTERS = ("R", "S", "N", "J", "L")


def random_word(rng, max_len=6, max_exp=3, letters=LETTERS):
    n = rng.randint(1, max_len)
    out = []
    for _ in range(n):
        e = 0
        while e == 0:
            e = rng.randint(-max_exp, max_exp)
        out.append((rng.choice(letters), e))
    return GroupWord(tuple(out))


def random_word_det(rng, det, **kw):
    while True:
        w = random_word(rng, **kw)
        if w.det() == det:
            return w


def random_rational(rng, height=12):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def _result(checked, failures):
    return {"ok": not failures, "checked": checked, "failures": failures}


def suite_relations(**_):
    got = check_presentation()
    fails = [f"{k}: {got[k]} != {v}" for k, v in PRESENTATION_UNITS.items() if got.get(k) != v]
    sq = twisted_square_unit()
    if sq != LambdaUnit(1, -1, 1):
        fails.append(f"(I tau)^2 unit {sq} != q^-1*t")
    return _result(len(PRESENTATION_UNITS) + 1, fails)


def suite_actions(seed=0, count=200, **_):
    from .qrat import act, act_twisted, quantize

    rng = random.Random(seed)
    fails = []
    for _ in range(count):
        w = random_word(rng)
        x = random_rational(rng)
        flavor = rng.choice(("sharp", "flat"))
        other = "flat" if flavor == "sharp" else "sharp"
        X = quantize(x, flavor)
        y = w.act(x)
        plain = act(w, X)
        want = flavor if w.det() == 1 else other
        if plain.point != quantize(y, want).point:
            fails.append(f"plain {w} on [{x}] {flavor}")
        tw = act_twisted(w, X)
        want_t = other if w.det() == 1 else flavor
        if tw.point != quantize(y, want_t).point:
            fails.append(f"twisted {w} on [{x}] {flavor}")
    return _result(2 * count, fails)


def suite_palindromes(seed=0, count=300, **_):
    from .qtrace import check_H_invariants, check_palindrome_det_neg, reversal_identity

    rng = random.Random(seed)
    fails = []
    checked = 0
    for _ in range(count):
        w = random_word_det(rng, -1)
        rep = check_palindrome_det_neg(w)
        checked += 1
        if not rep.ok:
            fails.append(f"{w}: trace {rep.trace.poly} not a one-signed palindrome")
    for c in hj_tuples(4, 5):
        checked += 1
        if not check_H_invariants(c).ok or not reversal_identity(c):
            fails.append(f"HJ tuple {c}")
    return _result(checked, fails)


def hj_tuples(max_len, max_digit):
    from itertools import product

    out = []
    for k in range(1, max_len + 1):
        out += list(product(range(2, max_digit + 1), repeat=k))
    return out


def suite_posets(max_sum=12, **_):
    from .fenceposet import build, generating_function, normalized_trace, odd_shapes

    fails = []
    shapes = odd_shapes(max_sum)
    for s in shapes:
        if generating_function(build(s)) != normalized_trace(s):
            fails.append(str(s))
    return _result(len(shapes), fails)


def pi_inverse_series(digits=None, order=33):
    from importlib import resources

    from .qseries import CFDigitStream, mobius_series, quantize_real

    path = digits or str(resources.files("qproj").joinpath("data/pi_cf.txt"))
    pi = quantize_real(CFDigitStream.from_file(path), order)
    return mobius_series("N S", pi)


def suite_series(digits=None, **_):
    s = pi_inverse_series(digits)
    fails = []
    for e in range(31):
        if s.coeff(e) != PI_INV_COEFFS.get(e, 0):
            fails.append(f"q^{e}: {s.coeff(e)} != {PI_INV_COEFFS.get(e, 0)}")
    return _result(31, fails)


def suite_vieta(order=20, **_):
    from .algebraic import quantized_vieta_deg4, quantized_vieta_deg6, split_case_deg4

    fails = []
    reps = [quantized_vieta_deg4(b, order) for b in (5, 7, 12)]
    reps += [quantized_vieta_deg6(b, order) for b in (1, 2, 3, 4)]
    reps += [split_case_deg4(n, "-", order) for n in (3, 4, 5)]
    reps += [split_case_deg4(n, "+", order) for n in (3, 4, 5)]
    checked = 0
    for r in reps:
        for name, held, e in r.statuses():
            checked += 1
            if not held:
                fails.append(f"degree {r.degree} b={r.b}: {name} (exponent {e})")
    return _result(checked, fails)


_RUNNERS = {
    "actions": suite_actions,
    "palindromes": suite_palindromes,
    "posets": suite_posets,
    "relations": suite_relations,
    "series": suite_series,
    "vieta": suite_vieta,
}


def run(name, seed=0, digits=None):
    return _RUNNERS[name](seed=seed, digits=digits)


__all__ = [
    "LETTERS",
    "PI_INV_COEFFS",
    "PRESENTATION_UNITS",
    "SUITES",
    "hj_tuples",
    "pi_inverse_series",
    "random_rational",
    "random_word",
    "random_word_det",
    "run",
]
