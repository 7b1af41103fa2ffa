"""Traces of quantized words: palindromes for det -1, positivity for det +1."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import T, LambdaUnit, LaurentPoly
from .qgroup import GroupWord, QMatrix, eval_word


@dataclass(frozen=True)
class Trace:
    """Tr(M_q) = unit * poly, with poly of valuation 0 (or zero)."""

    poly: LaurentPoly
    unit: LambdaUnit

    @property
    def value(self):
        return self.unit.apply(self.poly)

    def signed(self):
        """poly with the sign of the unit absorbed, so -(1 + q) prints as such."""
        return self.poly * self.unit.sign


def _word(w):
    return GroupWord.parse(w) if isinstance(w, str) else w


def qtrace(w):
    """Trace of M_q for a word; sign and power of q split into the unit."""
    M = eval_word(_word(w))
    return trace_of(M)


def trace_of(M):
    """a + d of the displayed entries; only a sign and a power of q move into the unit."""
    tr = M.a + M.d
    if not tr:
        return Trace(tr, M.unit)
    v = tr.valuation
    sign = 1 if tr.trailing > 0 else -1
    return Trace(tr.shift(-v) * sign, M.unit * LambdaUnit(sign, v, 0))


def render_trace(tr):
    """'-(1 + q + ...)' when every coefficient of the signed trace is negative."""
    from .laurent import render

    p = tr.signed()
    if p and all(c <= 0 for c in p.coeffs):
        return f"-({render(-p)})"
    return render(p)


def is_single_sign(p):
    nz = [c for c in p.coeffs if c]
    return all(c > 0 for c in nz) or all(c < 0 for c in nz)


@dataclass
class PalindromeReport:
    word: str
    trace: Trace
    reduced: LaurentPoly  # the trace polynomial with every factor t removed
    tpow: int  # how many factors t were removed
    palindromic: bool
    center: Fraction | None
    single_sign: bool
    reversal_ok: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.palindromic and self.single_sign and self.reversal_ok is not False


def check_palindrome_det_neg(w):
    """For det -1: Tr(M_q) is, up to a signed power of q, a palindrome of one sign.

    Quantized words are defined up to units of Lambda, so the sign test is made
    on the trace with all factors t removed (t itself has mixed signs). The
    zero trace counts as trivially palindromic and single-signed.
    """
    w = _word(w)
    if w.det() != -1:
        raise ValueError(f"word {w} has determinant {w.det()}, expected -1")
    tr = qtrace(w)
    p = tr.poly
    if not p:
        return PalindromeReport(str(w), tr, p, 0, True, None, True, True, ["zero trace"])
    k, reduced = p.strip_factor(T)
    pal, center = reduced.is_palindromic()
    full_pal, _ = p.is_palindromic()
    # Tr(M at q^-1) is Tr(M_q) reversed; palindromicity means they agree up to q^k
    rev = trace_of(eval_word(w).reverse())
    reversal_ok = rev.poly == p
    return PalindromeReport(str(w), tr, reduced, k, pal and full_pal, center, is_single_sign(reduced), reversal_ok)


def hj_matrix(c):
    """M_q(c1, ..., ck) = R^c1 S ... R^ck S."""
    letters = []
    for ci in c:
        letters += [("R", ci), ("S", 1)]
    return eval_word(GroupWord(tuple(letters)))


@dataclass
class HReport:
    digits: tuple
    matrix: QMatrix
    checks: dict
    trace: Trace
    trace_positive: bool

    @property
    def ok(self):
        return all(self.checks.values()) and self.trace_positive


def _nonneg(p):
    return all(c >= 0 for c in p.coeffs)


def check_H_invariants(c):
    """For M_q(c) = [[A, B], [C, D]] with every ci >= 2 check coefficientwise
    A >= 0, -B >= 0, A + D >= 0, A + B >= 0, A - C >= 0, and a positive trace.
    """
    c = tuple(int(x) for x in c)
    if not c or any(x < 2 for x in c):
        raise ValueError("all digits must be >= 2")
    M = hj_matrix(c)
    if M.unit.sign < 0 or M.unit.tpow:
        # fold sign and t-powers into the entries; q-powers do not affect positivity
        M = QMatrix(*(M.unit.apply(e) for e in M.entries))
    A, B, C, D = M.entries
    checks = {
        "A>=0": _nonneg(A),
        "-B>=0": _nonneg(-B),
        "A+D>=0": _nonneg(A + D),
        "A+B>=0": _nonneg(A + B),
        "A-C>=0": _nonneg(A - C),
    }
    tr = trace_of(M)
    pos = bool(tr.poly) and tr.unit.sign > 0 and _nonneg(tr.poly)
    return HReport(c, M, checks, tr, pos)


def reversal_identity(c):
    """Tr(N_q M_q(c1..ck)) = Tr(N_q M_q(ck..c1)) exactly."""
    N = eval_word("N")
    a = trace_of(N @ hj_matrix(c))
    b = trace_of(N @ hj_matrix(tuple(reversed(c))))
    return a == b


def inversion_identity(c):
    """Tr(M at q^-1) = q^-(sum(ci - 1)) Tr(M_q) for M = N_q M_q(c)."""
    M = eval_word("N") @ hj_matrix(c)
    k = sum(ci - 1 for ci in c)
    lhs = trace_of(M.reverse())
    rhs = trace_of(M)
    return lhs.poly == rhs.poly and lhs.unit == rhs.unit * LambdaUnit(1, -k, 0)
