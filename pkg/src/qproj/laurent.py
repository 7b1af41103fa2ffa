"""Exact Laurent polynomials in one variable q with integer coefficients.

A :class:`LaurentPoly` is stored as a valuation (lowest exponent) and a tuple
of coefficients, trimmed so that the first and last coefficient are nonzero.
The zero polynomial has an empty coefficient tuple and no valuation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as igcd


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist in Z[q, 1/q]."""


class ZeroValuation(ValueError):
    """Raised when reading the valuation or degree of the zero polynomial."""


def _trim(val, coeffs):
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return val + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    """Element of Z[q, 1/q]. Immutable and hashable."""

    __slots__ = ("_val", "_coeffs", "_hash")

    def __init__(self, coeffs=(), val=0):
        v, c = _trim(val, [int(x) for x in coeffs])
        object.__setattr__(self, "_val", v)
        object.__setattr__(self, "_coeffs", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _raw(cls, val, coeffs):
        # coeffs must already be trimmed
        obj = object.__new__(cls)
        object.__setattr__(obj, "_val", val if coeffs else 0)
        object.__setattr__(obj, "_coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls((coeff,), exp)

    @classmethod
    def from_dict(cls, terms):
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def q_int(cls, n):
        """Gauss q-integer 1 + q + ... + q^(n-1) for n >= 0."""
        if n < 0:
            raise ValueError("q_int expects n >= 0")
        return cls((1,) * n)

    # -- structure -------------------------------------------------------

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def valuation(self):
        if not self._coeffs:
            raise ZeroValuation("the zero polynomial has no valuation")
        return self._val

    @property
    def degree(self):
        if not self._coeffs:
            raise ZeroValuation("the zero polynomial has no degree")
        return self._val + len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def terms(self):
        """(exponent, coefficient) pairs with nonzero coefficient, increasing."""
        v = self._val
        return [(v + i, c) for i, c in enumerate(self._coeffs) if c]

    def coeff(self, exp):
        i = exp - self._val
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    @property
    def leading(self):
        if not self._coeffs:
            raise ZeroValuation("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def trailing(self):
        if not self._coeffs:
            raise ZeroValuation("the zero polynomial has no trailing coefficient")
        return self._coeffs[0]

    def content(self):
        return reduce(igcd, self._coeffs, 0)

    def is_nonnegative(self):
        return all(c >= 0 for c in self._coeffs)

    def is_monomial(self):
        return len(self._coeffs) == 1

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._val == other._val and self._coeffs == other._coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self._val, self._coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __neg__(self):
        return LaurentPoly._raw(self._val, tuple(-c for c in self._coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        lo = min(self._val, other._val)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - lo + 1)
        off = self._val - lo
        for i, c in enumerate(self._coeffs):
            out[off + i] += c
        off = other._val - lo
        for i, c in enumerate(other._coeffs):
            out[off + i] += c
        v, c = _trim(lo, out)
        return LaurentPoly._raw(v, c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw(self._val, tuple(c * other for c in self._coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    out[i + j] += ai * bj
        return LaurentPoly._raw(self._val + other._val, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if self.is_monomial() and self.trailing in (1, -1):
                return LaurentPoly.monomial(-self._val * (-n), self.trailing ** (-n))
            raise NotDivisible("only units ±q^k have negative powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly._raw(self._val + k, self._coeffs) if self._coeffs else ZERO

    def eval_at_one(self):
        return sum(self._coeffs)

    def __call__(self, x):
        """Evaluate at a number; ints are promoted to Fraction so 1/q stays exact."""
        if isinstance(x, int):
            x = Fraction(x)
        return sum((c * x ** e for e, c in self.terms()), Fraction(0) if isinstance(x, Fraction) else 0)

    def reverse(self):
        """Substitute q -> 1/q."""
        if not self._coeffs:
            return ZERO
        return LaurentPoly._raw(-self.degree, self._coeffs[::-1])

    def is_palindromic(self):
        """Return (palindromic, center) where center = (valuation + degree) / 2."""
        if not self._coeffs:
            raise ZeroValuation("palindromicity of the zero polynomial is undefined")
        return self._coeffs == self._coeffs[::-1], Fraction(self._val + self.degree, 2)

    def to_fraction_coeffs(self):
        return [Fraction(c) for c in self._coeffs]

    # -- division --------------------------------------------------------

    def div_exact(self, other):
        """Exact quotient in Z[q, 1/q]; raises :class:`NotDivisible`."""
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if not other._coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._coeffs:
            return ZERO
        # both have nonzero constant term after stripping q-powers
        num = list(self._coeffs)
        den = other._coeffs
        dn = len(den)
        if len(num) < dn:
            raise NotDivisible(f"{self} is not divisible by {other}")
        lead = den[-1]
        quot = [0] * (len(num) - dn + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = num[k + dn - 1]
            if top % lead:
                raise NotDivisible(f"{self} is not divisible by {other}")
            c = top // lead
            quot[k] = c
            if c:
                for i, d in enumerate(den):
                    num[k + i] -= c * d
        if any(num):
            raise NotDivisible(f"{self} is not divisible by {other}")
        return LaurentPoly(quot, self._val - other._val)

    def divides(self, other):
        try:
            other.div_exact(self)
        except NotDivisible:
            return False
        return True

    def strip_factor(self, factor):
        """Divide out the largest power of `factor`; returns (power, cofactor)."""
        k = 0
        p = self
        if not p:
            raise ZeroValuation("cannot strip factors from zero")
        while True:
            try:
                p2 = p.div_exact(factor)
            except NotDivisible:
                return k, p
            p = p2
            k += 1

    def primitive(self):
        """Return (content, primitive part) with positive leading coefficient."""
        if not self._coeffs:
            return 0, ZERO
        c = self.content()
        if self.leading < 0:
            c = -c
        return c, LaurentPoly._raw(self._val, tuple(x // c for x in self._coeffs))

    # -- text ------------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render(self)

    def to_json(self):
        return [[e, c] for e, c in self.terms()]

    @classmethod
    def from_json(cls, data):
        return cls.from_dict({int(e): int(c) for e, c in data})


ZERO = LaurentPoly._raw(0, ())
ONE = LaurentPoly._raw(0, (1,))
Q = LaurentPoly._raw(1, (1,))
QINV = LaurentPoly._raw(-1, (1,))
T = LaurentPoly._raw(0, (1, -1, 1))


def gcd(a, b):
    """Greatest common divisor in Z[q, 1/q].

    Euclid over Q[q] on the q-stripped polynomials, then the integer content
    gcd is restored. Normalized to valuation 0 and positive leading coefficient.
    """
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    if not b:
        return _normalize(a)
    if not a:
        return _normalize(b)
    ca, cb = a.content(), b.content()
    content = igcd(ca, cb)
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    if len(x) < len(y):
        x, y = y, x
    while y:
        x = _rem(x, y)
        x, y = y, x
    # x is the gcd over Q up to a scalar; clear denominators and content
    den = reduce(lambda m, f: m * f.denominator // igcd(m, f.denominator), x, 1)
    ints = [int(f * den) for f in x]
    g = LaurentPoly(ints)
    _, g = g.primitive()
    return g * content


def _rem(x, y):
    x = list(x)
    ly = len(y)
    lead = y[-1]
    while len(x) >= ly:
        c = x[-1] / lead
        if c:
            off = len(x) - ly
            for i in range(ly):
                x[off + i] -= c * y[i]
        x.pop()
        while x and x[-1] == 0:
            x.pop()
    # strip low zeros: q is a unit
    i = 0
    while i < len(x) and x[i] == 0:
        i += 1
    return x[i:]


def _normalize(p):
    p = p.shift(-p.valuation)
    return -p if p.leading < 0 else p


# -- units of Lambda = Z[q, 1/q] localized at t ---------------------------


@dataclass(frozen=True)
class LambdaUnit:
    """The unit sign * q^qpow * t^tpow of Z[q, 1/q]_t, with t = q^2 - q + 1."""

    sign: int = 1
    qpow: int = 0
    tpow: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __mul__(self, other):
        if not isinstance(other, LambdaUnit):
            return NotImplemented
        return LambdaUnit(self.sign * other.sign, self.qpow + other.qpow, self.tpow + other.tpow)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        return LambdaUnit(self.sign if n % 2 else 1, self.qpow * n, self.tpow * n)

    def inverse(self):
        return LambdaUnit(self.sign, -self.qpow, -self.tpow)

    def reverse(self):
        """Image under q -> 1/q; t(1/q) = q^-2 t."""
        return LambdaUnit(self.sign, -self.qpow - 2 * self.tpow, self.tpow)

    def is_one(self):
        return self == LambdaUnit()

    def apply(self, p):
        """Multiply a Laurent polynomial by this unit; negative t-powers must divide."""
        p = p.shift(self.qpow) * self.sign
        if self.tpow >= 0:
            return p * T ** self.tpow
        return p.div_exact(T ** (-self.tpow))

    def as_poly(self):
        return self.apply(ONE)

    @classmethod
    def of(cls, p):
        """Classify `p` as a unit of Lambda; raises ValueError otherwise."""
        if not p:
            raise ValueError("zero is not a unit")
        k, rest = p.strip_factor(T)
        if not rest.is_monomial() or rest.trailing not in (1, -1):
            raise ValueError(f"{p} is not a unit of Z[q,1/q]_t")
        return cls(rest.trailing, rest.valuation, k)

    def __str__(self):
        parts = ["-" if self.sign < 0 else ""]
        body = []
        if self.qpow:
            body.append("q" if self.qpow == 1 else f"q^{self.qpow}")
        if self.tpow:
            body.append("t" if self.tpow == 1 else f"t^{self.tpow}")
        return parts[0] + ("*".join(body) if body else "1")


# -- text format ----------------------------------------------------------


def _term(c, e):
    a = abs(c)
    if e == 0:
        return str(a)
    mono = "q" if e == 1 else f"q^{e}"
    return mono if a == 1 else f"{a}{mono}"


def render(p):
    """Increasing exponent order, e.g. ``1 + q + 2q^2``.

    A polynomial in q^-1 alone is written in increasing powers of q^-1,
    e.g. ``-q^-1 - q^-2 - q^-4``.
    """
    terms = p.terms()
    if not terms:
        return "0"
    if p.degree < 0:
        terms = terms[::-1]
    out = []
    for i, (e, c) in enumerate(terms):
        t = _term(c, e)
        if i == 0:
            out.append("-" + t if c < 0 else t)
        else:
            out.append((" - " if c < 0 else " + ") + t)
    return "".join(out)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)?\s*\*?\s*q\s*(?:\^\s*(?P<exp>[+-]?\d+))?
        | (?P<const>\d+)
        )\s*""",
    re.VERBOSE,
)


def parse(text):
    """Parse the rendering grammar. Accepts ``2q^3`` and ``2*q^3``; unicode minus too."""
    s = text.replace("−", "-").strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty polynomial text")
    terms = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial at {s[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator before {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("const") is not None:
            c, e = int(m.group("const")), 0
        else:
            c = int(m.group("coef")) if m.group("coef") else 1
            e = int(m.group("exp")) if m.group("exp") else 1
        terms[e] = terms.get(e, 0) + sign * c
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(terms)
