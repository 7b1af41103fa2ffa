"""Positive and negative (Hirzebruch-Jung) continued fractions of rationals,
their words in R, J, S, N, and the shape of the quantized products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .laurent import ONE, Q, LambdaUnit, NotDivisible
from .projective import ProjPoint
from .qgroup import GroupWord, QMatrix, eval_word


class ShapeMismatch(AssertionError):
    """The quantized product does not have the predicted unit and columns."""


@dataclass(frozen=True)
class CFExpansion:
    kind: str  # "positive" or "negative"
    digits: tuple

    def __post_init__(self):
        if self.kind not in ("positive", "negative"):
            raise ValueError("kind must be 'positive' or 'negative'")
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if not self.digits:
            raise ValueError("a continued fraction needs at least one digit")
        low = 1 if self.kind == "positive" else 2
        if any(d < low for d in self.digits[1:]):
            raise ValueError(f"{self.kind} continued fraction digits after the first must be >= {low}")

    def value(self):
        return evaluate(self)

    @property
    def parity(self):
        return "even" if len(self.digits) % 2 == 0 else "odd"

    def __str__(self):
        body = ",".join(map(str, self.digits))
        return f"[{body}]" if self.kind == "positive" else f"[[{body}]]"

    @classmethod
    def parse(cls, text):
        """'1,2,2' for positive digits, 'neg:2,2,3' for Hirzebruch-Jung digits."""
        text = text.strip()
        kind = "positive"
        if text.startswith("neg:"):
            kind, text = "negative", text[4:]
        return cls(kind, tuple(int(t) for t in text.replace(";", ",").split(",") if t.strip()))


def evaluate(cf):
    """Classical value of the expansion (may be infinite only for degenerate input)."""
    x = Fraction(cf.digits[-1])
    for d in reversed(cf.digits[:-1]):
        x = d + 1 / x if cf.kind == "positive" else d - 1 / x
    return x


def euclid_digits(x):
    x = Fraction(x)
    out = []
    while True:
        a = floor(x)
        out.append(a)
        if x == a:
            return out
        x = 1 / (x - a)


def positive_cf(x, parity="even"):
    """The positive expansion of x with the requested length parity."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    digits = euclid_digits(x)
    want = 0 if parity == "even" else 1
    if len(digits) % 2 != want:
        if len(digits) == 1 or digits[-1] >= 2:
            digits[-1:] = [digits[-1] - 1, 1]
        else:
            digits[-2:] = [digits[-2] + 1]
    return CFExpansion("positive", tuple(digits))


def negative_cf(x):
    x = Fraction(x)
    out = []
    while True:
        c = ceil(x)
        out.append(c)
        if x == c:
            return CFExpansion("negative", tuple(out))
        x = 1 / (c - x)


def cf_to_word(cf, prefix_n=False):
    """(R^a1 J)(R^a2 J)... for positive, (R^c1 S)(R^c2 S)... for negative digits."""
    sep = "J" if cf.kind == "positive" else "S"
    letters = [("N", 1)] if prefix_n else []
    for d in cf.digits:
        letters.append(("R", d))
        letters.append((sep, 1))
    return GroupWord(tuple(letters))


@dataclass(frozen=True)
class Shape:
    unit: LambdaUnit
    matrix: QMatrix  # the product with `unit` divided out; unit of its own is 1
    value: ProjPoint  # point read off the first column
    convergent: ProjPoint  # point read off the second column


def _divide(M, u):
    """Entries of M (a plain matrix) divided by the unit u, exactly."""
    inv = u.inverse()
    try:
        ents = [inv.apply(e) for e in M.entries]
    except NotDivisible as exc:
        raise ShapeMismatch(f"predicted unit {u} does not divide the product") from exc
    return QMatrix(*ents)


def factorization_shape(cf):
    """Quantize the word of `cf` and factor out the predicted Lambda-unit.

    Positive even [a1..a2m]:   q^min(0,a1) t^m [[q U#, U'#], [q V#, V'#]]
    Positive odd [a1..a2m+1]:  q^min(0,a1) t^m [[q Ub, U'b], [q Vb, V'b]]
    Negative, N-prefixed:      q^(min(0,c1)-1) [[Ub, -q^(ck-1) U'b], [Vb, -q^(ck-1) V'b]]
    """
    digits = cf.digits
    if cf.kind == "positive":
        n = len(digits)
        if n % 2 == 1 and n < 3:
            raise ValueError("odd positive expansions need at least three digits")
        m = n // 2
        P = eval_word(cf_to_word(cf))
        u = P.unit * LambdaUnit(1, min(0, digits[0]), m)
        core = _divide(QMatrix(*P.entries), P.unit.inverse() * u)
        try:
            first = (core.a.div_exact(Q), core.c.div_exact(Q))
        except NotDivisible as exc:
            raise ShapeMismatch("first column is not divisible by q") from exc
        value = ProjPoint.make(*first)
        conv = ProjPoint.make(core.b, core.d)
        flavor_expected = "sharp" if n % 2 == 0 else "flat"
        _check_column_points(cf, value, conv, flavor_expected)
        return Shape(u, core, value, conv)

    P = eval_word(cf_to_word(cf, prefix_n=True))
    u = P.unit * LambdaUnit(1, min(0, digits[0]) - 1, 0)
    core = _divide(QMatrix(*P.entries), P.unit.inverse() * u)
    ck = digits[-1]
    shift = ONE.shift(ck - 1)
    try:
        second = (-core.b.div_exact(shift), -core.d.div_exact(shift))
    except NotDivisible as exc:
        raise ShapeMismatch("second column is not divisible by q^(ck-1)") from exc
    value = ProjPoint.make(core.a, core.c)
    conv = ProjPoint.make(*second)
    _check_negative_columns(cf, value, conv)
    return Shape(u, core, value, conv)


def _check_column_points(cf, value, conv, flavor):
    from .qrat import quantize

    x = evaluate(cf)
    if value != quantize(x, flavor).point:
        raise ShapeMismatch(f"first column is not [{x}] {flavor}")
    head = CFExpansion("positive", cf.digits[:-1]) if len(cf.digits) > 1 else None
    xc = evaluate(head) if head else None
    if xc is not None and conv != quantize(xc, flavor).point:
        raise ShapeMismatch(f"second column is not [{xc}] {flavor}")


def _check_negative_columns(cf, value, conv):
    # N M(c1..ck) sends infinity to -x, so both columns are flat points of negatives
    from .qrat import quantize

    x = evaluate(cf)
    if value != quantize(-x, "flat").point:
        raise ShapeMismatch(f"first column is not [{-x}] flat")
    if len(cf.digits) > 1:
        xc = evaluate(CFExpansion("negative", cf.digits[:-1]))
        if conv != quantize(-xc, "flat").point:
            raise ShapeMismatch(f"second column is not [{-xc}] flat")
