"""Quantized Vieta relations for two families of algebraic equations.

Degree 4:  x^4 - b x^2 + 1 = 0            (four real roots iff b > 2)
Degree 6:  x^6 - 3x^5 - b x^4 + (2b+5) x^3 - b x^2 - 3x + 1 = 0   (six iff b >= 1)

Roots are isolated with exact rational bisection, their continued fraction
digits are read off by refining the isolating interval, and each root is
quantized to a q-series. Every relation is then checked modulo q^N.

Root labels. Degree 4: x1 is the largest root, x2 = 1/x1, x3 = -1/x1, x4 = -x1.
Degree 6: x1 is the largest root, x5 = G x1, x3 = G x5, x2 = 1/x1, x6 = G x2,
x4 = G x6, with G(x) = (x - 1)/x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor

from .laurent import ONE, Q, QINV
from .qgroup import QMatrix, eval_word
from .qseries import CFDigitStream, QSeries, mobius_series, quantize_real


class OutOfRange(ValueError):
    """b outside the range where every root is real."""


class PrecisionStall(RuntimeError):
    """Interval refinement ran out of budget before fixing the next digit."""


class RelationViolated(AssertionError):
    def __init__(self, name, exponent, coefficient):
        super().__init__(f"{name}: coefficient of q^{exponent} is {coefficient}, expected 0")
        self.name = name
        self.exponent = exponent
        self.coefficient = coefficient


# -- integer polynomials, coefficients in increasing degree -------------------


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign(v):
    return (v > 0) - (v < 0)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _taylor_shift(p, a):
    """Coefficients of p(x + a)."""
    c = list(p)
    n = len(c)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return c


def _recip_shift(p, a):
    """y^n p(a + 1/y): its root 1/(x - a) corresponds to the root x of p."""
    return tuple(reversed(_taylor_shift(p, a)))


def family(degree, b):
    if degree == 4:
        if b <= 2:
            raise OutOfRange(f"x^4 - bx^2 + 1 has four real roots only for b > 2 (got b = {b})")
        return (1, 0, -b, 0, 1)
    if degree == 6:
        if b < 1:
            raise OutOfRange(f"the degree-6 family has six real roots only for b >= 1 (got b = {b})")
        return (1, -3, -b, 2 * b + 5, -b, -3, 1)
    raise OutOfRange("degree must be 4 or 6")


def _isqrt_exact(n):
    if n < 0:
        return None
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r if r * r == n else None


def factorization(degree, b):
    """Rational factors (low-to-high coefficients), a single entry when irreducible."""
    f = family(degree, b)
    if degree == 4:
        n = _isqrt_exact(b + 2)
        if n is not None and n >= 3:
            return [(1, -n, 1), (1, n, 1)]
        n = _isqrt_exact(b - 2)
        if n is not None and n >= 1:
            return [(-1, -n, 1), (-1, n, 1)]
        return [f]
    if b == 2:
        return [(1, -3, 1), (-1, -1, 1), (-1, 1, 1)]
    # b = k^2 + k + 1
    disc = _isqrt_exact(4 * b - 3)
    if disc is not None and disc % 2 == 1:
        k = (disc - 1) // 2
        return [(1, k - 1, -(k + 2), 1), (1, -(k + 2), k - 1, 1)]
    return [f]


# -- root isolation ------------------------------------------------------------


class RealRoot:
    """A real root of an integer polynomial in an isolating interval (lo, hi).

    For an irrational root p changes sign strictly inside; lo == hi marks an
    exact rational root.
    """

    def __init__(self, poly, lo, hi):
        self.poly = tuple(poly)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._slo = _sign(poly_eval(self.poly, self.lo))

    @property
    def exact(self):
        return self.lo == self.hi

    def refine(self):
        """One bisection step."""
        if self.exact:
            return
        mid = (self.lo + self.hi) / 2
        s = _sign(poly_eval(self.poly, mid))
        if s == 0:
            self.lo = self.hi = mid
        elif s == self._slo:
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width):
        while self.hi - self.lo > width:
            self.refine()
        return self

    def approx(self):
        return (self.lo + self.hi) / 2

    def __repr__(self):
        return f"RealRoot({float(self.lo):.12g} .. {float(self.hi):.12g})"


def isolate(poly, expected):
    """Isolating intervals for `expected` distinct real roots, in increasing order."""
    poly = tuple(poly)
    lead = abs(poly[-1])
    bound = 1 + max(Fraction(abs(c), lead) for c in poly[:-1])
    pieces = 8
    while True:
        step = 2 * bound / pieces
        pts = [-bound + i * step for i in range(pieces + 1)]
        vals = [_sign(poly_eval(poly, x)) for x in pts]
        roots = []
        last = None  # index of last nonzero sample
        for i, s in enumerate(vals):
            if s == 0:
                roots.append(RealRoot(poly, pts[i], pts[i]))
                last = None
                continue
            if last is not None and vals[last] != s and last == i - 1:
                roots.append(RealRoot(poly, pts[last], pts[i]))
            last = i
        if len(roots) == expected:
            return roots
        if pieces > 1 << 20:
            raise PrecisionStall("could not separate the real roots")
        pieces *= 2


@lru_cache(maxsize=64)
def _isolated(degree, b):
    f = family(degree, b)
    return tuple((r.lo, r.hi) for r in isolate(f, degree))


def isolate_roots(degree, b):
    """Fresh isolating intervals for all real roots, in increasing order."""
    f = family(degree, b)
    return [RealRoot(f, lo, hi) for lo, hi in _isolated(degree, b)]


@dataclass
class RootSystemInfo:
    degree: int
    b: int
    factors: list
    roots: list

    @property
    def reducible(self):
        return len(self.factors) > 1


def classify(degree, b):
    return RootSystemInfo(degree, b, factorization(degree, b), isolate_roots(degree, b))


# -- continued fraction digits --------------------------------------------------


def _cf_digits(root, budget):
    """Digits by integer search on the transformed polynomials.

    The state is a polynomial p with a single root in (lo, hi), hi possibly
    infinite. The digit a = floor(root) is found by sign tests at integers
    (galloping when hi is infinite, then bisection), and the root 1/(x - a)
    of y^n p(a + 1/y) carries on.
    """
    if root.exact:
        yield from _euclid(root.lo)
        return
    p, lo, hi = root.poly, root.lo, root.hi
    evals = 0

    def below(k):
        # k < root  (k inside the isolating interval); None if k is the root
        nonlocal evals
        evals += 1
        if evals > budget:
            raise PrecisionStall(f"refinement budget of {budget} sign tests exhausted")
        s = _sign(poly_eval(p, k))
        return None if s == 0 else s == s_lo

    while True:
        s_lo = _sign(poly_eval(p, lo))
        a = floor(lo)  # largest integer known to be <= root
        top = None if hi is None else (hi if hi != floor(hi) else hi - 1)
        top = None if top is None else floor(top)  # largest integer that may be < root
        k, step = a + 1, 1
        # gallop up to an integer above the root
        while top is None or k <= top:
            b = below(k)
            if b is None:
                yield from _euclid(Fraction(k))
                return
            if not b:
                break
            a = k
            k, step = k + step, step * 2
        else:
            k = top + 1
        # bisection between a (below) and k (above or out of range)
        while k - a > 1:
            mid = (a + k) // 2
            b = below(mid)
            if b is None:
                yield from _euclid(Fraction(mid))
                return
            a, k = (mid, k) if b else (a, mid)
        yield a
        xlo, xhi = max(lo, a), (a + 1 if hi is None else min(hi, a + 1))
        p = _recip_shift(p, a)
        lo = Fraction(1) / (xhi - a)
        hi = None if xlo == a else Fraction(1) / (xlo - a)


def _euclid(x):
    while True:
        a = floor(x)
        yield a
        if x == a:
            return
        x = 1 / (x - a)


def root_cf_stream(root, budget=1_000_000):
    """Continued fraction digits of an isolated root, produced on demand."""
    return CFDigitStream(_cf_digits(root, budget), irrational=not root.exact)


# -- root labelling -------------------------------------------------------------

_MOB = {
    "J": (0, 1, 1, 0),  # 1/x
    "S": (0, -1, 1, 0),  # -1/x
    "N": (-1, 0, 0, 1),  # -x
    "G": (1, -1, 1, 0),  # (x-1)/x
}


def _image(m, lo, hi):
    a, b, c, d = m
    den_lo, den_hi = c * lo + d, c * hi + d
    if den_lo == 0 or den_hi == 0 or _sign(den_lo) != _sign(den_hi):
        return None
    u, v = (a * lo + b) / den_lo, (a * hi + b) / den_hi
    return min(u, v), max(u, v)


def _match(roots, i, m):
    """Index of the root that the Mobius map m sends roots[i] to."""
    for _ in range(400):
        img = _image(m, roots[i].lo, roots[i].hi)
        if img is not None:
            hits = [j for j, r in enumerate(roots) if not (r.hi < img[0] or r.lo > img[1])]
            if len(hits) == 1:
                return hits[0]
        for r in roots:
            r.refine()
    raise PrecisionStall("could not match roots under the symmetry")


def label_roots(degree, b):
    """Roots in the fixed labelling, as a list indexed 1..degree (index 0 unused)."""
    roots = isolate_roots(degree, b)
    order = sorted(range(len(roots)), key=lambda i: roots[i].lo)
    i1 = order[-1]
    lab = {1: i1}
    if degree == 4:
        lab[2] = _match(roots, i1, _MOB["J"])
        lab[3] = _match(roots, i1, _MOB["S"])
        lab[4] = _match(roots, i1, _MOB["N"])
    else:
        lab[5] = _match(roots, i1, _MOB["G"])
        lab[3] = _match(roots, lab[5], _MOB["G"])
        lab[2] = _match(roots, i1, _MOB["J"])
        lab[6] = _match(roots, lab[2], _MOB["G"])
        lab[4] = _match(roots, lab[6], _MOB["G"])
    if sorted(lab.values()) != list(range(degree)):
        raise AssertionError(f"symmetries do not permute the roots: {lab}")
    return [None] + [roots[lab[k]] for k in range(1, degree + 1)]


def permutation(degree, b, name):
    """The permutation of labels 1..degree induced by a symmetry (J, S, N or G)."""
    roots = label_roots(degree, b)
    idx = {id(r): k for k, r in enumerate(roots) if r is not None}
    out = {}
    for k in range(1, degree + 1):
        j = _match(roots[1:], k - 1, _MOB[name])
        out[k] = idx[id(roots[1:][j])]
    return out


def cycle_type(perm):
    seen, lens = set(), []
    for s in perm:
        if s in seen:
            continue
        n, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        lens.append(n)
    return sorted(lens)


# -- quantized roots ------------------------------------------------------------


@lru_cache(maxsize=128)
def _root_series(degree, b, work):
    roots = label_roots(degree, b)
    return tuple(quantize_real(root_cf_stream(r), work) for r in roots[1:])


def elementary_symmetric(xs):
    """[1, e1, ..., en] of the series xs."""
    e = [QSeries.from_poly(ONE)] + [QSeries.zero()] * len(xs)
    for x in xs:
        for k in range(len(xs), 0, -1):
            e[k] = e[k] + e[k - 1] * x
    return e


@dataclass
class Relation:
    name: str
    residual: QSeries  # should vanish modulo q^N

    def status(self, n):
        """(holds, first divergent exponent or None)."""
        if self.residual.prec < n:
            return False, None
        v = self.residual.valuation
        if not self.residual.is_zero() and v < n:
            return False, v
        return True, None


@dataclass
class VietaReport:
    degree: int
    b: int
    order: int
    work_precision: int
    factors: list
    series: list  # X1..Xn
    sigma: list  # [1, S1, ..., Sn]
    relations: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def statuses(self):
        return [(r.name, *r.status(self.order)) for r in self.relations]

    @property
    def ok(self):
        return all(h for _, h, _ in self.statuses())

    def failures(self):
        return [(n, e) for n, h, e in self.statuses() if not h]

    def raise_for_failures(self):
        for r in self.relations:
            held, e = r.status(self.order)
            if not held:
                coeff = None if e is None else r.residual.coeff(e)
                raise RelationViolated(r.name, e, coeff)
        return self

    def to_json(self):
        return {
            "degree": self.degree,
            "b": self.b,
            "order": self.order,
            "work_precision": self.work_precision,
            "factors": [list(f) for f in self.factors],
            "relations": [{"name": n, "holds": h, "first_divergent_exponent": e} for n, h, e in self.statuses()],
            "sigma": {f"S{k}": str(s.truncate(self.order)) for k, s in enumerate(self.sigma) if k},
            "ok": self.ok,
        }


def _adaptive(build, degree, b, n, margin=6, tries=6):
    """Raise the working precision until every residual is known mod q^n."""
    work = n + margin
    for _ in range(tries):
        xs = list(_root_series(degree, b, work))
        rels, extras = build(xs)
        short = min(r.residual.prec for r in rels)
        if short >= n:
            return work, xs, rels, extras
        work += n - short + 2
    return work, xs, rels, extras


def _pair(name, xs, i, j, m):
    """Residual of (c X_i + d) X_j - (a X_i + b) for the quantized matrix m."""
    xi, xj = xs[i - 1], xs[j - 1]
    return Relation(name, (m.c * xi + m.d) * xj - (m.a * xi + m.b))


def _poly_in(xs_coeffs, x):
    """sum c_k x^k for series or polynomial coefficients c_k (low to high)."""
    acc = QSeries.zero()
    for c in reversed(xs_coeffs):
        acc = acc * x + c
    return acc


def pairwise_deg4(xs):
    J, S, N = eval_word("J"), eval_word("S"), eval_word("N")
    return [
        _pair("qX1X2 = (q-1)(X1+X2) + 1", xs, 1, 2, J),
        _pair("qX3X4 = (q-1)(X3+X4) + 1", xs, 4, 3, J),
        _pair("qX1X3 = -1", xs, 1, 3, S),
        _pair("qX2X4 = -1", xs, 2, 4, S),
        _pair("(q-1)X1X4 = -X1 - X4 + 1 - q^-1", xs, 1, 4, N),
        _pair("(q-1)X2X3 = -X2 - X3 + 1 - q^-1", xs, 2, 3, N),
    ]


def _vieta4(xs):
    e = elementary_symmetric(xs)
    s1, s2, s3, s4 = e[1:]
    qm1 = Q - ONE
    rels = [
        Relation("S4 = q^-2", s4 - QINV * QINV),
        Relation("S3 = -q^-1 S1", s3 + QINV * s1),
        Relation("(q-1)S2 = (q + q^-1 - 3)S1 + 2(1 - q^-1)", qm1 * s2 - (Q + QINV - 3) * s1 - 2 * (ONE - QINV)),
    ]
    # quartic with coefficients written through S1 only
    c2 = (Q + QINV - 3) * s1 / QSeries.from_poly(qm1).truncate(s1.prec + 4) + 2 * QINV
    quartic = [QINV * QINV, QINV * s1, c2, -s1, QSeries.from_poly(ONE)]
    for k, x in enumerate(xs, start=1):
        rels.append(Relation(f"quartic at X{k}", _poly_in(quartic, x)))
    return rels, {"sigma": e}


def quantized_vieta_deg4(b, n=20):
    facs = factorization(4, b)

    def build(xs):
        rels, extra = _vieta4(xs)
        return rels + pairwise_deg4(xs), extra

    work, xs, rels, extra = _adaptive(build, 4, b, n)
    return VietaReport(4, b, n, work, facs, xs, extra["sigma"], rels)


def pairwise_relations_deg4(b, n=20):
    facs = factorization(4, b)
    work, xs, rels, _ = _adaptive(lambda xs: (pairwise_deg4(xs), {}), 4, b, n)
    sigma = elementary_symmetric(xs)
    return VietaReport(4, b, n, work, facs, xs, sigma, rels)


# degree 6: the symmetry group generated by G and J acts simply transitively on
# the roots, so every pair of labels is related by exactly one of its elements
_G6 = {
    "G": eval_word("R S"),
    "G^2": eval_word("R S R S"),
    "J": eval_word("J"),
    "JG": eval_word("J R S"),
    "GJ": eval_word("R S J"),
}
_G6_PAIRS = [
    ("X1X5 = X1 - 1", 1, 5, "G"),
    ("X5X3 = X5 - 1", 5, 3, "G"),
    ("X3X1 = X3 - 1", 3, 1, "G"),
    ("X2X6 = X2 - 1", 2, 6, "G"),
    ("X6X4 = X6 - 1", 6, 4, "G"),
    ("X4X2 = X4 - 1", 4, 2, "G"),
    ("X1X2 = q^-1(q-1)(X1+X2) + q^-1", 1, 2, "J"),
    ("X5X4 = q^-1(q-1)(X5+X4) + q^-1", 5, 4, "J"),
    ("X3X6 = q^-1(q-1)(X3+X6) + q^-1", 3, 6, "J"),
    ("X1X4 = q(X1+X4) + 1 - q", 1, 4, "JG"),
    ("X5X6 = q(X5+X6) + 1 - q", 5, 6, "JG"),
    ("X3X2 = q(X3+X2) + 1 - q", 3, 2, "JG"),
    ("(q-1)X1X6 = -X1 - X6 + q", 1, 6, "GJ"),
    ("(q-1)X5X2 = -X5 - X2 + q", 5, 2, "GJ"),
    ("(q-1)X3X4 = -X3 - X4 + q", 3, 4, "GJ"),
]


def pairwise_deg6(xs):
    return [_pair(name, xs, i, j, _G6[m]) for name, i, j, m in _G6_PAIRS]


def _vieta6(xs):
    e = elementary_symmetric(xs)
    s1, s2, s3, s4, s5, s6 = e[1:]
    q2 = Q * Q
    return [
        Relation("S6 = 1", s6 - 1),
        Relation("S5 = -S1 + 6", s5 + s1 - 6),
        Relation("S4 = -5S1 + S2 + 15", s4 + 5 * s1 - s2 - 15),
        Relation("S3 = -5S1 + 2S2 + 10", s3 + 5 * s1 - 2 * s2 - 10),
        Relation(
            "(q-1)S2 = (q^2 + q - 4 + q^-1)S1 + 3(-q^2 + q + 2 - q^-1)",
            (Q - ONE) * s2 - (q2 + Q - 4 + QINV) * s1 - 3 * (-q2 + Q + 2 - QINV),
        ),
    ], e


def _cubic_orbit(name, xs, labels):
    """X^3 - B X^2 + (B - 3) X + 1 on each root of a G-orbit, B the orbit sum."""
    B = sum((xs[k - 1] for k in labels), QSeries.zero())
    one = QSeries.from_poly(ONE)
    cubic = [one, B - 3, -B, one]
    return B, [Relation(f"{name} cubic at X{k}", _poly_in(cubic, xs[k - 1])) for k in labels]


def quantized_vieta_deg6(b, n=20):
    facs = factorization(6, b)

    def build(xs):
        rels, e = _vieta6(xs)
        rels += pairwise_deg6(xs)
        B1, r1 = _cubic_orbit("B1", xs, (1, 3, 5))
        B2, r2 = _cubic_orbit("B2", xs, (2, 4, 6))
        rels += r1 + r2
        rels.append(Relation("B1 + B2 = S1", B1 + B2 - e[1]))
        extra = {"sigma": e, "B1": B1, "B2": B2}
        if b == 2:
            rels += _b2_factors(xs)
        return rels, extra

    work, xs, rels, extra = _adaptive(build, 6, b, n)
    rep = VietaReport(6, b, n, work, facs, xs, extra["sigma"], rels)
    rep.extras.update(B1=extra["B1"], B2=extra["B2"])
    return rep


def _b2_factors(xs):
    """(X^2 - [3]# X + q^2)(q X^2 - (q^2+q-1) X - 1)(q^2 X^2 - (q^2-q-1) X - q) = 0."""
    q2 = Q * Q
    quads = [
        ("X^2 - [3]# X + q^2", [q2, -(ONE + Q + q2), ONE]),
        ("qX^2 - (q^2+q-1)X - 1", [-ONE, -(q2 + Q - ONE), Q]),
        ("q^2X^2 - (q^2-q-1)X - q", [-Q, -(q2 - Q - ONE), q2]),
    ]
    coeffs = [[QSeries.from_poly(c) for c in cs] for _, cs in quads]
    rels = []
    for k, x in enumerate(xs, start=1):
        prod = QSeries.from_poly(ONE)
        for cs in coeffs:
            prod = prod * _poly_in(cs, x)
        rels.append(Relation(f"b=2 quantized factors at X{k}", prod))
    return rels


def _q_point(x, flavor, n):
    from .qrat import quantize
    from .qseries import taylor

    return taylor(quantize(x, flavor), n)


def split_case_deg4(n_value, sign, n=20):
    """b = n^2 - 2 (sign '-') or b = n^2 + 2 (sign '+'): quadratic factors and closed forms."""
    if sign not in ("-", "+"):
        raise ValueError("sign must be '-' or '+'")
    if sign == "-" and n_value < 3 or sign == "+" and n_value < 1:
        raise OutOfRange("need n >= 3 for b = n^2 - 2 and n >= 1 for b = n^2 + 2")
    b = n_value * n_value + (2 if sign == "+" else -2)
    k = n_value

    def build(xs):
        x1, x2, x3, x4 = xs
        e = elementary_symmetric(xs)
        s1, s2, s3, s4 = e[1:]
        prec = min(x.prec for x in xs) + 8
        rels = [Relation("S4 = q^-2", s4 - QINV * QINV)]
        if sign == "-":
            ps, ms = _q_point(k, "sharp", prec), _q_point(-k, "sharp", prec)
            quad = [QSeries.from_poly(ONE.shift(k - 1)), -ps, QSeries.from_poly(ONE)]
            for i in (1, 2):
                rels.append(Relation(f"X{i}^2 - [{k}]# X{i} + q^{k - 1} = 0", _poly_in(quad, xs[i - 1])))
            quad2 = [QSeries.from_poly(ONE.shift(-k - 1)), -ms, QSeries.from_poly(ONE)]
            for i in (3, 4):
                rels.append(Relation(f"X{i}^2 - [-{k}]# X{i} + q^{-k - 1} = 0", _poly_in(quad2, xs[i - 1])))
            rels += [
                Relation(f"S1 = [{k}]# + [-{k}]#", s1 - ps - ms),
                Relation(f"S2 = [{k}]#[-{k}]# + q^{-k - 1} + q^{k - 1}", s2 - ps * ms - ONE.shift(-k - 1) - ONE.shift(k - 1)),
                Relation(f"S3 = q^{k - 1}[-{k}]# + q^{-k - 1}[{k}]#", s3 - ms.shift(k - 1) - ps.shift(-k - 1)),
            ]
        else:
            pf, mf = _q_point(k, "flat", prec), _q_point(-k, "flat", prec)
            one = QSeries.from_poly(ONE)
            lin = ONE - QINV
            quad = [QSeries.from_poly(-QINV), -(pf + lin), one]
            for i in (1, 3):
                rels.append(Relation(f"X{i}^2 + (q^-1 - 1 - [{k}]b) X{i} - q^-1 = 0", _poly_in(quad, xs[i - 1])))
            quad2 = [QSeries.from_poly(-QINV), -(mf + lin), one]
            for i in (2, 4):
                rels.append(Relation(f"X{i}^2 + (q^-1 - 1 - [-{k}]b) X{i} - q^-1 = 0", _poly_in(quad2, xs[i - 1])))
            rels.append(Relation(f"S1 = 2(1 - q^-1) + [{k}]b + [-{k}]b", s1 - 2 * lin - pf - mf))
        return rels, {"sigma": e}

    work, xs, rels, extra = _adaptive(build, 4, b, n)
    return VietaReport(4, b, n, work, factorization(4, b), xs, extra["sigma"], rels)


def symmetry_transport(degree, b, n=20):
    """mobius_series(T_q, X_i) = X_j mod q^n for each symmetry T and each label i."""
    names = ("J", "S", "N") if degree == 4 else ("G", "J")
    mats = {"J": eval_word("J"), "S": eval_word("S"), "N": eval_word("N"), "G": eval_word("R S")}
    out = {}
    work = n + 6
    for _ in range(6):
        xs = _root_series(degree, b, work)
        out, short = {}, n
        for name in names:
            perm = permutation(degree, b, name)
            for i, j in perm.items():
                img = mobius_series(mats[name], xs[i - 1], integral=False)
                short = min(short, img.prec)
                out[(name, i, j)] = img.prec >= n and img.agrees_below(xs[j - 1], n)
        if short >= n:
            return out
        work += n - short + 2
    return out


def classical_sigma(degree, b):
    """Classical elementary symmetric values sigma_1..sigma_n."""
    f = family(degree, b)
    d = len(f) - 1
    return [(-1) ** k * f[d - k] for k in range(1, d + 1)]


__all__ = [
    "OutOfRange",
    "PrecisionStall",
    "RealRoot",
    "Relation",
    "RelationViolated",
    "RootSystemInfo",
    "VietaReport",
    "classical_sigma",
    "classify",
    "cycle_type",
    "elementary_symmetric",
    "factorization",
    "family",
    "isolate",
    "isolate_roots",
    "label_roots",
    "pairwise_relations_deg4",
    "permutation",
    "quantized_vieta_deg4",
    "quantized_vieta_deg6",
    "root_cf_stream",
    "split_case_deg4",
    "symmetry_transport",
]
