"""Points of the projective line over Z(q) and the fractional-linear action."""

from __future__ import annotations

import math
from fractions import Fraction

from .laurent import ONE, ZERO, LaurentPoly, gcd, parse, render


class BothZero(ValueError):
    """0/0 is not a point of the projective line."""


class Indeterminate(ValueError):
    """Numerator and denominator both vanish at q = 1."""


class DegeneratePoint(ArithmeticError):
    """A fractional-linear map produced 0/0."""


INFINITY = math.inf


class ProjPoint:
    """A point num/den of P^1(Z(q)) in canonical form.

    The pair is coprime in Z[q, 1/q], the denominator has valuation 0 and a
    positive leading coefficient, and infinity is stored as 1/0.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @classmethod
    def make(cls, num, den=ONE):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, int):
            den = LaurentPoly.const(den)
        if not num and not den:
            raise BothZero("0/0 is not a projective point")
        if not den:
            return cls(ONE, ZERO)
        if not num:
            return cls(ZERO, ONE)
        g = gcd(num, den)
        if g != ONE:
            num = num.div_exact(g)
            den = den.div_exact(g)
        shift = -den.valuation
        num, den = num.shift(shift), den.shift(shift)
        if den.leading < 0:
            num, den = -num, -den
        return cls(num, den)

    @property
    def is_infinity(self):
        return not self.den

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # canonical form is unique, so structural hashing agrees with __eq__
        return hash((self.num, self.den))

    def reverse(self):
        """The point f(1/q)."""
        return ProjPoint.make(self.num.reverse(), self.den.reverse())

    def eval_at_one(self):
        n, d = self.num.eval_at_one(), self.den.eval_at_one()
        if d == 0:
            if n == 0:
                raise Indeterminate(f"{self} is 0/0 at q=1")
            return INFINITY
        return Fraction(n, d)

    def __str__(self):
        if self.is_infinity:
            return "1/0"
        if self.den == ONE:
            return render(self.num)
        return f"{_wrap(self.num)}/{_wrap(self.den)}"

    def __repr__(self):
        return f"ProjPoint({self})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls.make(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                return cls.make(parse(text[:i]), parse(text[i + 1 :]))
        return cls.make(parse(text), ONE)


def _wrap(p):
    s = render(p)
    return s if len(p.terms()) == 1 and p.trailing > 0 else f"({s})"


def make(num, den=ONE):
    return ProjPoint.make(num, den)


def equals(a, b):
    return a == b


def mobius(M, x):
    """Apply the 2x2 matrix with Laurent entries M.a, M.b, M.c, M.d to x."""
    n = M.a * x.num + M.b * x.den
    d = M.c * x.num + M.d * x.den
    if not n and not d:
        raise DegeneratePoint("fractional-linear map produced 0/0")
    return ProjPoint.make(n, d)


def eval_at_one(x):
    return x.eval_at_one()


def classical_mobius(m, x):
    """Integer 2x2 matrix ((a, b), (c, d)) acting on an extended rational."""
    (a, b), (c, d) = m
    if x == INFINITY:
        return INFINITY if c == 0 else Fraction(a, c)
    num = a * x + b
    den = c * x + d
    if den == 0:
        return INFINITY
    return Fraction(num) / den
