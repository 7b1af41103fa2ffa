"""Truncated Laurent series, q-reals from continued-fraction digit streams,
the fractional-linear action on series, and digit recovery.

A QSeries is q^val * (c0 + c1 q + ...) with every coefficient of an exponent
below ``prec`` known exactly; ``prec`` may be ``math.inf`` for finite sums.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .laurent import ONE, LaurentPoly
from .projective import ProjPoint
from .qgroup import GroupWord, QMatrix, eval_word, generator

INF = math.inf


class ZeroLeading(ArithmeticError):
    """Division by a series whose known prefix is zero."""


class NonIntegerOutput(ArithmeticError):
    """A series that must have integer coefficients does not."""


class InsufficientDigits(ValueError):
    """An irrational digit stream ran out before the requested order was reached."""


class DecodeFailed(ValueError):
    pass


class AmbiguityDetected(AssertionError):
    pass


class QSeries:
    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val, coeffs, prec):
        coeffs = [Fraction(c) for c in coeffs]
        # drop coefficients at or beyond the precision, then leading zeros
        if prec != INF:
            coeffs = coeffs[: max(0, prec - val)]
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        coeffs = coeffs[i:]
        val += i
        if not coeffs:
            val = prec if prec != INF else 0
        else:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors --

    @classmethod
    def zero(cls, prec=INF):
        return cls(0, (), prec)

    @classmethod
    def from_poly(cls, p, prec=INF):
        if not p:
            return cls.zero(prec)
        return cls(p.valuation, p.coeffs, prec)

    @classmethod
    def from_terms(cls, terms, prec):
        """From a mapping exponent -> coefficient."""
        if not terms:
            return cls.zero(prec)
        lo = min(terms)
        hi = max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)], prec)

    # -- inspection --

    def is_zero(self):
        return not self.coeffs

    @property
    def valuation(self):
        """Lowest exponent with a nonzero known coefficient (prec if none is known)."""
        return self.val

    @property
    def leading(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, e):
        if e >= self.prec:
            raise IndexError(f"coefficient of q^{e} is beyond precision {self.prec}")
        i = e - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def terms(self):
        return [(self.val + i, c) for i, c in enumerate(self.coeffs) if c]

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self, lo, hi):
        """Integer coefficients for exponents lo..hi-1; raises NonIntegerOutput."""
        out = []
        for e in range(lo, hi):
            c = self.coeff(e)
            if c.denominator != 1:
                raise NonIntegerOutput(f"coefficient of q^{e} is {c}")
            out.append(int(c))
        return out

    def truncate(self, n):
        return QSeries(self.val, self.coeffs, min(self.prec, n))

    def to_poly(self):
        """The known prefix as a Laurent polynomial (integer coefficients required)."""
        if not self.is_integral():
            raise NonIntegerOutput("series has non-integer coefficients")
        return LaurentPoly(tuple(int(c) for c in self.coeffs), self.val)

    # -- arithmetic --

    def __neg__(self):
        return QSeries(self.val, [-c for c in self.coeffs], self.prec)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        if self.is_zero() and other.is_zero():
            return QSeries.zero(prec)
        lo = min(s.val for s in (self, other) if not s.is_zero())
        hi = max(s.val + len(s.coeffs) for s in (self, other))
        if prec != INF:
            hi = min(hi, prec)
        out = [Fraction(0)] * max(0, hi - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                j = s.val + i - lo
                if j < len(out):
                    out[j] += c
        return QSeries(lo, out, prec)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        # absolute precision: known prefix of one factor times the lowest term of the other
        prec = min(self.prec + other.val, other.prec + self.val)
        if self.is_zero() or other.is_zero():
            return QSeries.zero(prec)
        lo = self.val + other.val
        n = len(self.coeffs) + len(other.coeffs) - 1
        if prec != INF:
            n = min(n, prec - lo)
        out = [Fraction(0)] * max(0, n)
        b = other.coeffs
        for i, x in enumerate(self.coeffs):
            if i >= n:
                break
            if not x:
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
        return QSeries(lo, out, prec)

    __rmul__ = __mul__

    def shift(self, k):
        return QSeries(self.val + k, self.coeffs, self.prec + k)

    def invert(self):
        if self.is_zero():
            raise ZeroLeading("cannot invert a series with no known nonzero coefficient")
        v = self.val
        prec = self.prec - 2 * v
        if prec == INF:
            raise ValueError("inverting an exact series needs an explicit precision; use .truncate(n)")
        n = prec + v  # number of coefficients of the result
        a = self.coeffs
        c0 = a[0]
        out = []
        for k in range(max(0, n)):
            s = Fraction(1) if k == 0 else Fraction(0)
            for j in range(1, min(k, len(a) - 1) + 1):
                s -= a[j] * out[k - j]
            out.append(s / c0)
        return QSeries(-v, out, prec)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __eq__(self, other):
        """Equality of the jointly known prefix."""
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return (self - other).truncate(prec).is_zero()

    __hash__ = None

    def agrees_below(self, other, n):
        if n > self.prec or n > other.prec:
            raise ValueError(f"comparison below {n} exceeds known precision")
        return (self - other).valuation >= n

    def distance(self, other):
        """2^-nu(f - g) on the known prefix; 0 if equal to joint precision."""
        d = self - other
        if d.is_zero():
            return 0.0
        return 2.0 ** (-d.valuation)

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e, c in self.terms():
                a = abs(c)
                mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
                num = str(a) if (a != 1 or not mono) else ""
                t = num + mono
                parts.append(("-" if c < 0 else "+", t))
            body = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for s, t in parts[1:]:
                body += f" {s} {t}"
        if self.prec == INF:
            return body
        return f"{body} + O(q^{self.prec})"

    def __repr__(self):
        return f"QSeries({self})"

    def to_json(self):
        return {
            "valuation": self.val,
            "coeffs": [str(c) if c.denominator != 1 else int(c) for c in self.coeffs],
            "precision": None if self.prec == INF else self.prec,
        }

    @classmethod
    def from_json(cls, data):
        prec = INF if data["precision"] is None else data["precision"]
        return cls(data["valuation"], [Fraction(c) for c in data["coeffs"]], prec)


def _coerce(x):
    if isinstance(x, QSeries):
        return x
    if isinstance(x, LaurentPoly):
        return QSeries.from_poly(x)
    if isinstance(x, (int, Fraction)):
        return QSeries(0, [x], INF)
    return NotImplemented


def series_add(f, g):
    return f + g


def series_mul(f, g):
    return f * g


def series_invert(f, n=None):
    if n is not None:
        f = f.truncate(n)
    return f.invert()


def taylor_raw(num, den, n):
    """Expansion of num/den to absolute precision n (den any nonzero Laurent polynomial)."""
    if not den:
        raise ZeroLeading("denominator is zero")
    if not num:
        return QSeries.zero(n)
    # precision of num/den: n requires den known to n - num.val + 2*den.val
    d = QSeries.from_poly(den).truncate(n - num.valuation + 2 * den.valuation)
    inv = d.invert()
    return (QSeries.from_poly(num) * inv).truncate(n)


def taylor(x, n):
    """Laurent expansion of a projective point num/den, known below q^n."""
    if isinstance(x, ProjPoint):
        if x.is_infinity:
            raise ZeroLeading("the point 1/0 has no Laurent expansion")
        return taylor_raw(x.num, x.den, n)
    return taylor(x.point, n)  # a QRational


# -- digit streams -----------------------------------------------------------


class CFDigitStream:
    """Digits a0; a1, a2, ... of a continued fraction, produced on demand.

    ``source`` is any iterable of integers (finite or infinite). Streams flagged
    ``irrational`` must never end.
    """

    def __init__(self, source, irrational=None, name=None):
        self._it = iter(source)
        self._cache = []
        self._done = False
        self.irrational = irrational
        self.name = name

    @classmethod
    def finite(cls, digits, name=None):
        return cls(list(digits), irrational=False, name=name)

    @classmethod
    def periodic(cls, head, period, name=None):
        return cls(itertools.chain(head, itertools.cycle(period)), irrational=True, name=name)

    @classmethod
    def parse(cls, text, irrational=None):
        """'3;7,15,1,292' or '1;2,2,2' (';' or ',' separated); trailing '...' marks irrational."""
        t = text.strip()
        dots = t.endswith("...") or t.endswith("…")
        t = t.rstrip(".…").rstrip(", ")
        ds = [int(s) for s in t.replace(";", ",").split(",") if s.strip()]
        irr = irrational if irrational is not None else (True if dots else None)
        return cls(ds, irrational=irr)

    @classmethod
    def from_file(cls, path, irrational=True):
        """One integer per line, first line the integer part; '#' comments allowed."""
        digits = []
        for line in Path(path).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                digits.append(int(line))
        return cls(digits, irrational=irrational, name=str(path))

    def digit(self, i):
        """The i-th digit (0 is the integer part) or None if the stream has ended."""
        while len(self._cache) <= i and not self._done:
            try:
                d = int(next(self._it))
            except StopIteration:
                self._done = True
                break
            if self._cache and d < 1:
                raise ValueError(f"digit {len(self._cache)} is {d}; digits after the first must be >= 1")
            self._cache.append(d)
        return self._cache[i] if i < len(self._cache) else None

    def prefix(self, n):
        out = []
        for i in range(n):
            d = self.digit(i)
            if d is None:
                break
            out.append(d)
        return out

    @property
    def exhausted(self):
        return self._done

    def __iter__(self):
        i = 0
        while True:
            d = self.digit(i)
            if d is None:
                return
            yield d
            i += 1


def gap_bound(digits):
    """Lower bound on the valuation of [x]# - [x]b for x = [a0; a1, ..., an].

    Written d + (digit sum) - 1 with d absorbing the first digit where it is
    not >= 1; for every case this is the total digit sum minus one.
    """
    return sum(digits) - 1


def _convergent(digits):
    x = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        x = d + 1 / x
    return x


def _word_of_digits(digits):
    letters = []
    for a in digits:
        letters += [("R", a), ("J", 1)]
    return GroupWord(tuple(letters))


_BASE_SHARP = (ONE, LaurentPoly())
_BASE_FLAT = (ONE, ONE - LaurentPoly.monomial(1))


def _column_point(W, base):
    h, g = base
    return (W.a * h + W.b * g, W.c * h + W.d * g)


@dataclass
class RealQuantization:
    series: QSeries
    digits_used: list
    bound: int
    convergents: list  # sharp series of the convergents examined


def quantize_real(stream, n, flavor="sharp", return_report=False):
    """[x]_q known below q^n from the digits of x.

    For a stream that ends, this is the expansion of the exact q-rational.
    Otherwise convergents are expanded until the guaranteed agreement depth
    (digit sum minus one) exceeds n and two consecutive expansions agree.
    """
    if isinstance(stream, (list, tuple)):
        stream = CFDigitStream.finite(stream)
    W = QMatrix.identity()
    prev = None
    used = []
    seen = []
    i = 0
    while True:
        a = stream.digit(i)
        if a is None:
            if not used:
                raise InsufficientDigits("empty digit stream")
            if stream.irrational:
                raise InsufficientDigits(
                    f"stream ended after {len(used)} digits; need digit sum > {n + 1} for order {n}"
                )
            # exact rational
            from .qrat import quantize

            s = taylor(quantize(_convergent(used), flavor).point, n)
            return RealQuantization(s, used, gap_bound(used), seen) if return_report else s
        used.append(a)
        W = W @ eval_word(_word_of_digits([a]))
        # even words send 1/0 to sharp points, odd words send 1/(1-q) to sharp points
        even = len(used) % 2 == 0
        want_sharp = flavor == "sharp"
        base = _BASE_SHARP if even == want_sharp else _BASE_FLAT
        num, den = _column_point(W, base)
        cur = taylor_raw(num, den, n)
        seen.append(cur)
        i += 1
        if stream.digit(i) is None and not stream.irrational:
            continue  # the final exact value is taken above
        if gap_bound(used) > n and prev is not None and cur.agrees_below(prev, n):
            if not cur.is_integral():
                raise NonIntegerOutput(f"stabilized series has non-integer coefficients: {cur}")
            return RealQuantization(cur, list(used), gap_bound(used), seen) if return_report else cur
        prev = cur


def _as_matrix(M):
    if isinstance(M, QMatrix):
        return M
    if isinstance(M, str):
        return eval_word(GroupWord.parse(M))
    if isinstance(M, GroupWord):
        return eval_word(M)
    raise TypeError("expected a QMatrix, a GroupWord or word text")


def mobius_series(M, f, integral=True):
    """(a f + b)/(c f + d) with precision propagated; the unit of M cancels."""
    M = _as_matrix(M)
    num = M.a * f + M.b
    den = M.c * f + M.d
    if den.is_zero():
        raise ZeroLeading("denominator series vanishes to the known precision")
    out = num / den
    if integral and not out.is_integral():
        raise NonIntegerOutput(f"non-integer coefficient in {out}")
    return out


@dataclass(frozen=True)
class GapReport:
    value: Fraction
    series: QSeries
    valuation: int
    bound: int

    @property
    def ok(self):
        return self.valuation >= self.bound


def left_right_gap(x, n):
    """The series [x]# - [x]b of a rational, with the valuation bound."""
    from .contfrac import euclid_digits
    from .qrat import quantize

    if isinstance(x, (list, tuple)):
        x = _convergent(list(x))
    x = Fraction(x)
    s = quantize(x, "sharp").point
    f = quantize(x, "flat").point
    diff_num = s.num * f.den - f.num * s.den
    series = taylor_raw(diff_num, s.den * f.den, n)
    return GapReport(x, series, diff_num.valuation, gap_bound(euclid_digits(x)))


# -- digit recovery ----------------------------------------------------------


def _shifts(f, lo, hi):
    """Yield (a, R_q^-a . f) for a = lo..hi, using R^-1 g = (g - 1)/q and R g = q g + 1."""
    g = f
    for _ in range(0, lo, -1 if lo < 0 else 1):
        g = g.shift(1) + 1 if lo < 0 else (g - 1).shift(-1)
    for a in range(lo, hi + 1):
        yield a, g
        g = (g - 1).shift(-1)


def _J(f):
    return mobius_series(generator("J"), f, integral=False)


def _candidates(f, lo, hi):
    """Digits a in [lo, hi] with J R^-a f of valuation 0 and leading coefficient 1.

    R^-a f must be the q-deformation of a number in [0, 1), so it vanishes or
    has positive valuation; only those are passed through J.
    """
    term, cont = [], []
    for a, g in _shifts(f, lo, hi):
        if g.prec < 1 or not g.is_integral():
            continue
        if g.is_zero():
            term.append((a, None))
            continue
        if g.val < 1:
            continue
        try:
            y = _J(g)
        except ZeroLeading:
            continue
        if y.prec < 1 or not y.is_integral():
            continue
        if y.val == 0 and y.leading == 1:
            cont.append((a, y))
    return term, cont


def _canonical_tail(digits):
    if len(digits) > 1 and digits[-1] == 1:
        return digits[:-2] + [digits[-2] + 1]
    return digits


def decode_cf(f, digit_bound=64, max_digits=40):
    """Recover the digits a0; a1, ... of x from a prefix of [x]_q.

    At each step the next digit a is the one making J R^-a (current) start with
    1 + O(q). A digit leaving zero ends the expansion. Every returned answer is
    re-encoded and compared with f.
    """
    results = []

    def verify(digits, terminated):
        if terminated:
            from .qrat import quantize

            g = taylor(quantize(_convergent(digits), "sharp").point, f.prec)
            return g == f
        bound = min(f.prec, gap_bound(digits))
        g = quantize_real(CFDigitStream.finite(digits), f.prec)
        return g.truncate(bound) == f.truncate(bound)

    def search(cur, digits, depth):
        if len(results) > 1:
            return
        lo = -digit_bound if not digits else 1
        term, cont = _candidates(cur, lo, digit_bound)
        if term:
            ds = digits + [term[0][0]]
            if verify(ds, True):
                results.append((ds, True))
            elif verify(ds, False):
                # the remainder only looked like zero because precision ran out
                results.append((ds, False))
            elif digits and verify(digits, False):
                results.append((digits, False))
            return
        if not cont or len(digits) + 1 >= max_digits:
            # out of precision or digit budget: the last usable digit is the one found
            if cont and verify(digits + [cont[0][0]], False):
                results.append((digits + [cont[0][0]], False))
            elif digits and verify(digits, False):
                results.append((digits, False))
            return
        for a, y in cont:
            if y.prec - y.val < 2:
                if verify(digits + [a], False):
                    results.append((digits + [a], False))
                continue
            search(y, digits + [a], depth + 1)

    search(f, [], 0)
    if not results:
        raise DecodeFailed("no digit sequence re-encodes to the given series")
    uniq = {tuple(_canonical_tail(d) if t else d) for d, t in results}
    if len(uniq) > 1:
        raise AmbiguityDetected(f"several digit sequences re-encode to the series: {sorted(uniq)}")
    digits, terminated = results[0]
    return _canonical_tail(digits) if terminated else digits


def decode_result(f, digit_bound=64, max_digits=40):
    """Digits together with whether a finite expansion reproduces f exactly to its precision."""
    digits = decode_cf(f, digit_bound, max_digits)
    from .qrat import quantize

    g = taylor(quantize(_convergent(digits), "sharp").point, f.prec)
    return digits, g == f
