"""Left (flat) and right (sharp) q-rationals and the actions on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .contfrac import cf_to_word, factorization_shape, positive_cf
from .laurent import ONE, Q, ZERO, LaurentPoly
from .projective import INFINITY, ProjPoint, classical_mobius, mobius
from .qgroup import GroupWord, TwistedOp, eval_word, generator

FLAVORS = ("sharp", "flat")

#: [inf]# = 1/0 and [inf]b = 1/(1-q)
INF_SHARP = ProjPoint.make(ONE, ZERO)
INF_FLAT = ProjPoint.make(ONE, ONE - Q)


class WordDependence(AssertionError):
    """Two words with the same classical action gave different q-deformations."""


def _other(flavor):
    return "flat" if flavor == "sharp" else "sharp"


def _check_flavor(flavor):
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be 'sharp' or 'flat', not {flavor!r}")


def _value(x):
    if x == INFINITY or x == "inf" or x == "oo":
        return INFINITY
    return Fraction(x)


@dataclass(frozen=True)
class QRational:
    value: object  # Fraction or math.inf
    flavor: str
    point: ProjPoint

    def __str__(self):
        return str(self.point)

    def reverse(self):
        """The rational function at q^-1 (flavor tag kept for bookkeeping)."""
        return self.point.reverse()

    def to_json(self):
        v = "inf" if self.value == INFINITY else str(self.value)
        return {"value": v, "flavor": self.flavor, **self.point.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(_value(data["value"]), data["flavor"], ProjPoint.from_json(data))


def parse_value(text):
    text = text.strip()
    if text.lower() in ("inf", "oo", "1/0", "infinity"):
        return INFINITY
    return Fraction(text)


def quantize(x, flavor="sharp"):
    """[x]# or [x]b for an extended rational x."""
    _check_flavor(flavor)
    return _quantize(_value(x), flavor)


@lru_cache(maxsize=8192)
def _quantize(x, flavor):
    if x == INFINITY:
        return QRational(INFINITY, flavor, INF_SHARP if flavor == "sharp" else INF_FLAT)
    # det +1 preserves the base point's flavor, det -1 swaps it
    main = "even" if flavor == "sharp" else "odd"
    alt = "odd" if flavor == "sharp" else "even"
    p = mobius(eval_word(cf_to_word(positive_cf(x, main))), INF_SHARP)
    p_alt = mobius(eval_word(cf_to_word(positive_cf(x, alt))), INF_FLAT)
    if p != p_alt:
        raise WordDependence(f"[{x}] {flavor}: {p} != {p_alt}")
    return QRational(x, flavor, p)


def q_integer(n, flavor="sharp"):
    """Closed forms: [n]# = 1+q+...+q^(n-1), [n]b = 1+...+q^(n-2)+q^n for n >= 1."""
    if n < 1:
        raise ValueError("closed form only for n >= 1")
    sharp = LaurentPoly.q_int(n)
    if flavor == "sharp":
        return sharp
    return sharp - LaurentPoly.monomial(n - 1) + LaurentPoly.monomial(n)


def _classical(word, x):
    return classical_mobius(word.classical(), x)


def act(word, x):
    """M_q . [x]: the flavor flips exactly when det M = -1."""
    if isinstance(word, str):
        word = GroupWord.parse(word)
    pt = mobius(eval_word(word), x.point)
    flavor = x.flavor if word.det() == 1 else _other(x.flavor)
    return QRational(_classical(word, x.value), flavor, pt)


def act_twisted(word, x):
    """(M_q I_q tau) . [x]: the flavor flips exactly when det M = +1."""
    if isinstance(word, str):
        word = GroupWord.parse(word)
    op = TwistedOp(eval_word(word) @ generator("I"), True)
    pt = op(x.point)
    flavor = x.flavor if word.det() == -1 else _other(x.flavor)
    return QRational(_classical(word, x.value), flavor, pt)


def _neg_value(v):
    return INFINITY if v == INFINITY else -v


def _inv_value(v):
    if v == INFINITY:
        return Fraction(0)
    if v == 0:
        return INFINITY
    return 1 / v


def negate(x):
    """[-x] of the same flavor, computed two ways and cross-checked.

    Form 1: -q^-1 [x]_{q^-1}.   Form 2: N_q applied to the other flavor of [x].
    """
    r = x.point.reverse()
    form1 = ProjPoint.make(-r.num, r.den.shift(1))
    other = quantize(x.value, _other(x.flavor)).point
    form2 = mobius(generator("N"), other)
    if form1 != form2:
        raise WordDependence(f"negation forms differ: {form1} vs {form2}")
    return QRational(_neg_value(x.value), x.flavor, form1)


def invert(x):
    """[1/x] of the same flavor, computed two ways and cross-checked.

    Form 1: 1/[x]_{q^-1}.   Form 2: ((q-1)X + 1)/(qX + 1 - q), X the other flavor.
    """
    r = x.point.reverse()
    form1 = ProjPoint.make(r.den, r.num)
    other = quantize(x.value, _other(x.flavor)).point
    form2 = mobius(generator("J"), other)
    if form1 != form2:
        raise WordDependence(f"inversion forms differ: {form1} vs {form2}")
    return QRational(_inv_value(x.value), x.flavor, form1)


@dataclass(frozen=True)
class FlatSharpReport:
    value: object
    sharp: ProjPoint
    flat: ProjPoint
    thomas: ProjPoint  # I_q tau applied to the flat point
    combination: ProjPoint | None  # (q U# + (1-q) U'#) / (q V# + (1-q) V'#)
    ok: bool


def flat_from_sharp(x):
    """Check [x]# = I_q tau [x]b and, for finite x, the convergent combination

    q U#_2m + (1 - q) U#_2m-1 = Ub_2m (and likewise for denominators).
    """
    x = _value(x)
    sharp = quantize(x, "sharp").point
    flat = quantize(x, "flat").point
    thomas = TwistedOp(generator("I"), True)(flat)
    ok = thomas == sharp
    comb = None
    if x != INFINITY:
        shape = factorization_shape(positive_cf(x, "even"))
        core = shape.matrix
        one_minus_q = ONE - Q
        # first column already carries the factor q
        num = core.a + core.b * one_minus_q
        den = core.c + core.d * one_minus_q
        comb = ProjPoint.make(num, den)
        ok = ok and comb == flat
    return FlatSharpReport(x, sharp, flat, thomas, comb, ok)


def shift_identity(x, flavor):
    """[x+1] = q [x] + 1."""
    a = quantize(x, flavor).point
    b = quantize(_value(x) + 1, flavor).point
    return b == ProjPoint.make(a.num.shift(1) + a.den, a.den)


def minus_inverse_identity(x):
    """[-1/x]# = -1/(q [x]#)."""
    a = quantize(x, "sharp").point
    b = quantize(-1 / _value(x), "sharp").point
    return b == ProjPoint.make(-a.den, a.num.shift(1))


__all__ = [
    "FLAVORS",
    "INF_FLAT",
    "INF_SHARP",
    "FlatSharpReport",
    "QRational",
    "WordDependence",
    "act",
    "act_twisted",
    "flat_from_sharp",
    "invert",
    "minus_inverse_identity",
    "negate",
    "parse_value",
    "q_integer",
    "quantize",
    "shift_identity",
]
