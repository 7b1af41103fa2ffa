"""Quantized PGL2(Z): q-matrices of group words, projective comparison, and
the twisted operators M_q I_q tau that exchange left and right q-rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .laurent import ONE, Q, QINV, T, ZERO, LambdaUnit, LaurentPoly, render
from .projective import ProjPoint, classical_mobius, make, mobius


class UnknownGenerator(KeyError):
    pass


@dataclass(frozen=True)
class QMatrix:
    """The matrix unit * [[a, b], [c, d]] with Laurent polynomial entries.

    Keeping the Lambda-unit apart lets inverses stay polynomial while the
    value remains exact (not only projective).
    """

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly
    unit: LambdaUnit = field(default_factory=LambdaUnit)

    @classmethod
    def of(cls, rows, unit=None):
        (a, b), (c, d) = rows
        conv = lambda x: x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)
        return cls(conv(a), conv(b), conv(c), conv(d), unit or LambdaUnit())

    @classmethod
    def identity(cls, unit=None):
        return cls(ONE, ZERO, ZERO, ONE, unit or LambdaUnit())

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return QMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.unit * other.unit,
        )

    def scaled(self, unit):
        return QMatrix(self.a, self.b, self.c, self.d, self.unit * unit)

    def det_entries(self):
        return self.a * self.d - self.b * self.c

    def det(self):
        """Determinant as a Lambda-unit (raises if the matrix is not invertible over Lambda)."""
        return LambdaUnit.of(self.det_entries()) * self.unit * self.unit

    def inverse(self):
        u = LambdaUnit.of(self.det_entries())
        return QMatrix(self.d, -self.b, -self.c, self.a, (self.unit * u).inverse())

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = QMatrix.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def reverse(self):
        """Entrywise q -> 1/q (the conjugation tau M tau)."""
        return QMatrix(self.a.reverse(), self.b.reverse(), self.c.reverse(), self.d.reverse(), self.unit.reverse())

    def trace_entries(self):
        return self.a + self.d

    def normalized(self):
        """Same value; common t-power, q-power and sign moved into the unit.

        Entries end up with no common t factor, minimal valuation 0, and the
        first nonzero entry has positive trailing coefficient.
        """
        nz = [e for e in self.entries if e]
        tpow = min(e.strip_factor(T)[0] for e in nz)
        qpow = min(e.valuation for e in nz)
        ents = []
        tk = T ** tpow
        for e in self.entries:
            e = e.div_exact(tk) if tpow else e
            ents.append(e.shift(-qpow))
        sign = 1 if next(e for e in ents if e).trailing > 0 else -1
        if sign < 0:
            ents = [-e for e in ents]
        return QMatrix(*ents, self.unit * LambdaUnit(sign, qpow, tpow))

    def value_equals(self, other):
        """Exact equality of the represented matrices over Lambda."""
        x, y = self.normalized(), other.normalized()
        return x.entries == y.entries and x.unit == y.unit

    def eval_at_one(self):
        s = self.unit.sign
        return tuple(tuple(s * e.eval_at_one() for e in row) for row in self.rows())

    def __str__(self):
        body = "[[{}, {}], [{}, {}]]".format(*(render(e) for e in self.entries))
        return body if self.unit.is_one() else f"{self.unit} * {body}"

    def to_json(self):
        u = self.unit
        return {
            "entries": [[e.to_json() for e in row] for row in self.rows()],
            "unit": {"sign": u.sign, "qpow": u.qpow, "tpow": u.tpow},
        }

    @classmethod
    def from_json(cls, data):
        (a, b), (c, d) = [[LaurentPoly.from_json(e) for e in row] for row in data["entries"]]
        return cls(a, b, c, d, LambdaUnit(**data["unit"]))


def unit_ratio(A, B):
    """The unit u with A = u * B as matrices over Lambda, or None if none exists."""
    x, y = A.normalized(), B.normalized()
    if x.entries != y.entries:
        return None
    return x.unit / y.unit


def proj_equal(A, B):
    return unit_ratio(A, B) is not None


# -- generators -------------------------------------------------------------

_Qm1 = Q - ONE  # q - 1
_1mQ = ONE - Q
_1mQinv = ONE - QINV

GENERATORS = {
    "R": QMatrix(Q, ONE, ZERO, ONE),
    "S": QMatrix(ZERO, -QINV, ONE, ZERO),
    "N": QMatrix(-ONE, _1mQinv, _Qm1, ONE),
    "J": QMatrix(_Qm1, ONE, Q, _1mQ),
    "L": QMatrix(ONE, ZERO, ONE, QINV),
    "I": QMatrix(ONE, _Qm1, _1mQ, Q),
}

CLASSICAL = {
    "R": ((1, 1), (0, 1)),
    "S": ((0, -1), (1, 0)),
    "N": ((-1, 0), (0, 1)),
    "J": ((0, 1), (1, 0)),
    "L": ((1, 0), (1, 1)),
    "I": ((1, 0), (0, 1)),
}


def generator(name):
    try:
        return GENERATORS[name]
    except KeyError:
        raise UnknownGenerator(f"unknown generator {name!r}; expected one of R,S,N,J,L,I") from None


# -- words ------------------------------------------------------------------

_TOKEN = re.compile(r"^([RSNJL])(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class GroupWord:
    """A word in the letters R, S, N, J, L with integer exponents."""

    letters: tuple = ()

    def __post_init__(self):
        clean = []
        for name, exp in self.letters:
            if name not in CLASSICAL or name == "I":
                raise UnknownGenerator(f"unknown letter {name!r}")
            if exp:
                clean.append((name, int(exp)))
        object.__setattr__(self, "letters", tuple(clean))

    @classmethod
    def parse(cls, text):
        letters = []
        for tok in text.replace("*", " ").split():
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad word token {tok!r}; expected e.g. R^3, S^-1, N")
            letters.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        return cls(tuple(letters))

    @classmethod
    def of(cls, *letters):
        """GroupWord.of("R", 3, "J", ...) or GroupWord.of(("R", 3), "J")."""
        res = []
        for item in letters:
            if isinstance(item, int):
                name, _ = res.pop()
                res.append((name, item))
            elif isinstance(item, tuple):
                res.append(item)
            else:
                res.append((item, 1))
        return cls(tuple(res))

    def __add__(self, other):
        return GroupWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self):
        return GroupWord(tuple((n, -e) for n, e in reversed(self.letters)))

    def classical(self):
        m = ((1, 0), (0, 1))
        for name, exp in self.letters:
            g = CLASSICAL[name]
            if exp < 0:
                g = _int_inverse(g)
            for _ in range(abs(exp)):
                m = _int_mul(m, g)
        return m

    def det(self):
        (a, b), (c, d) = self.classical()
        return a * d - b * c

    def act(self, x):
        """Classical fractional-linear action on an extended rational."""
        return classical_mobius(self.classical(), x)

    def __str__(self):
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters) or "Id"


def _int_mul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _int_inverse(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    return ((d * det, -b * det), (-c * det, a * det))


@lru_cache(maxsize=4096)
def _gen_power(name, exp):
    return generator(name) ** exp


def eval_word(w):
    """The q-matrix of a word: product of generator q-matrices, inverses exact."""
    if isinstance(w, str):
        w = GroupWord.parse(w)
    m = QMatrix.identity()
    for name, exp in w.letters:
        m = m @ _gen_power(name, exp)
    return m


# -- relations --------------------------------------------------------------


def _scalar_unit(M):
    """If M is a scalar matrix u * Id over Lambda, return u; else None."""
    return unit_ratio(M, QMatrix.identity())


def check_presentation():
    """Exact units of the defining relations, evaluated on the displayed generators.

    Returns a dict relation -> LambdaUnit u such that the product equals u * Id.
    """
    R, S, N = generator("R"), generator("S"), generator("N")
    J = generator("J")
    Rinv = R.inverse()
    out = {
        "S^2": _scalar_unit(S @ S),
        "(RS)^3": _scalar_unit((R @ S) ** 3),
        "N^2": _scalar_unit(N @ N),
        "(NR)^2": _scalar_unit((N @ R) ** 2),
        "(NS)^2": _scalar_unit((N @ S) ** 2),
        "J^2": _scalar_unit(J @ J),
        "R^-1 J R J R^-1 / S": unit_ratio(Rinv @ J @ R @ J @ Rinv, S),
        "J R J R^-1 J R / N": unit_ratio(J @ R @ J @ Rinv @ J @ R, N),
    }
    return out


# -- twisted operators ------------------------------------------------------


@dataclass(frozen=True)
class TwistedOp:
    """The operator f -> matrix . tau^twisted(f) on P^1(Z(q))."""

    matrix: QMatrix
    twisted: bool = False

    def __matmul__(self, other):
        # A tau^e B tau^f = A (tau^e B tau^e) tau^(e+f)
        B = other.matrix.reverse() if self.twisted else other.matrix
        return TwistedOp(self.matrix @ B, self.twisted != other.twisted)

    def __call__(self, x):
        return apply_op(self, x)

    def normalized(self):
        return TwistedOp(self.matrix.normalized(), self.twisted)

    def proj_equal(self, other):
        return self.twisted == other.twisted and proj_equal(self.matrix, other.matrix)

    def __str__(self):
        return f"{self.matrix}" + (" . tau" if self.twisted else "")


def untwisted(w):
    return TwistedOp(eval_word(w), False)


def twisted(w):
    """The twisted quantization M_q I_q tau of a word."""
    return TwistedOp(eval_word(w) @ generator("I"), True)


def apply_op(op, x):
    if op.twisted:
        x = ProjPoint.make(x.num.reverse(), x.den.reverse())
    return mobius(op.matrix, x)


def twisted_square_unit():
    """The unit u with (I_q tau)^2 = u * Id."""
    Ibar = TwistedOp(generator("I"), True)
    sq = Ibar @ Ibar
    assert not sq.twisted
    return _scalar_unit(sq.matrix)


# -- stabilizer of R_q --------------------------------------------------------


def is_fixed(f):
    """Whether R_q . f = f projectively."""
    return mobius(generator("R"), f) == f


def stabilizer_fixed_points():
    """All f = h/g in P^1(Q(q)) with R_q . f = f.

    R_q . (h/g) = (q h + g)/g, so the fixed-point condition is
    (q h + g) g - h g = g ((q - 1) h + g) = 0. Z[q] is a domain, so either
    g = 0 or g = (1 - q) h, giving 1/0 and 1/(1 - q).
    """
    # the condition is bilinear in (h, g); record each factor's solution line
    R = generator("R")
    # coefficients of h and g in the two factors of g*((q-1)h + g)
    factors = [(ZERO, ONE), (R.a - R.d, R.b)]  # g = 0 ; (q-1)h + g = 0
    points = set()
    for ch, cg in factors:
        # solve ch*h + cg*g = 0 with (h, g) != 0: take (h, g) = (cg, -ch)
        pt = make(cg, -ch)
        assert is_fixed(pt)
        points.add(pt)
    return points
