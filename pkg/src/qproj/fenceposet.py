"""Left circular fence posets and the generating function of admissible ideals.

Labels: 0 is the distinguished bottom vertex, 1..L run along the fence
(L = a1 + ... + am - 1), and L+1 closes the circle. The fence climbs a1 - 1
steps, descends a2, climbs a3, ..., descends a_{m-1}, and climbs am - 1.
Vertex L+1 is identified with L in the order (they lie in a 2-cycle of the
preorder, so an ideal holds both or neither). Vertex 0 lies below vertex 1 and
below the vertex right after the last valley. The white pair is the last step
of the final descent.

When am = 1 the final climb is empty and the last valley is L itself. Then
L+1 sits above L and above 0, and the 2-cycle between L and L+1 only binds
ideals that contain 0 (mirroring the white pair, which only binds ideals
without 0). This is the reading under which ideals with 0 match the fence of
the flat numerator and ideals without 0 match the fence of the convergent's
flat denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .laurent import T, LaurentPoly


class BadShape(ValueError):
    pass


@dataclass(frozen=True)
class CircularFencePoset:
    shape: tuple
    size: int  # number of vertices, 0..size-1
    below: tuple  # below[v] = vertices that must be in an ideal containing v (direct)
    white: tuple  # the two white vertices, tied when 0 is absent
    zero_link: tuple | None = None  # pair tied when 0 is present (only when am = 1)

    @cached_property
    def down_closure(self):
        """down_closure[v] = every vertex forced into an ideal by v, v included."""
        out = []
        for v in range(self.size):
            seen = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in self.below[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(frozenset(seen))
        return tuple(out)

    def relations(self):
        """Direct relations (x, y) meaning x <= y."""
        return sorted((x, y) for y in range(self.size) for x in self.below[y])


def build(shape):
    shape = tuple(int(a) for a in shape)
    m = len(shape)
    if m < 3 or m % 2 == 0:
        raise BadShape("shape needs an odd number (at least 3) of entries")
    if any(a < 1 for a in shape):
        raise BadShape("shape entries must be positive")
    L = sum(shape) - 1
    e = L + 1
    below = [set() for _ in range(L + 2)]

    # runs along the path 1..L: +1 means the next vertex is above
    steps = [+1] * (shape[0] - 1)
    for i, a in enumerate(shape[1:-1], start=1):
        steps += [-1 if i % 2 == 1 else +1] * a
    steps += [+1] * (shape[-1] - 1)
    assert len(steps) == L - 1
    for i, s in enumerate(steps, start=1):
        lo, hi = (i, i + 1) if s > 0 else (i + 1, i)
        below[hi].add(lo)

    valley = L - (shape[-1] - 1)  # end of the final descent
    below[1].add(0)
    below[e].add(L)
    link = None
    if valley < L:
        below[L].add(e)  # closing 2-cycle
        below[valley + 1].add(0)
    else:
        below[e].add(0)
        link = (L, e)
    white = (valley - 1, valley)
    return CircularFencePoset(shape, L + 2, tuple(frozenset(b) for b in below), white, link)


def _is_down_closed(p, ideal):
    return all(p.below[v] <= ideal for v in ideal)


def is_admissible(p, ideal):
    ideal = frozenset(ideal)
    if not _is_down_closed(p, ideal):
        return False
    if 0 in ideal:
        if p.zero_link is None:
            return True
        a, b = p.zero_link
        return (a in ideal) == (b in ideal)
    a, b = p.white
    return (a in ideal) == (b in ideal)


def _down_sets(p, allowed):
    """All down-closed subsets of the vertex set `allowed` (itself down-closed)."""
    # condense 2-cycles: a block is the set of vertices forced together
    blocks = {}
    for v in allowed:
        blocks.setdefault(frozenset(x for x in p.down_closure[v] if v in p.down_closure[x]), None)
    blocks = sorted(blocks, key=lambda b: (len(set().union(*(p.down_closure[v] for v in b))), min(b)))
    need = [frozenset().union(*(p.down_closure[v] for v in b)) - b for b in blocks]

    out = []

    def rec(i, cur):
        if i == len(blocks):
            out.append(frozenset(cur))
            return
        rec(i + 1, cur)
        if need[i] <= cur:
            rec(i + 1, cur | blocks[i])

    # blocks are ordered so every requirement precedes its dependents
    rec(0, frozenset())
    return out


def admissible_ideals(p):
    """All admissible ideals, by size and then by sorted labels."""
    everything = frozenset(range(p.size))
    ideals = [i for i in _down_sets(p, everything) if is_admissible(p, i)]
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def admissible_ideals_bruteforce(p):
    out = []
    for k in range(p.size + 1):
        for c in combinations(range(p.size), k):
            if is_admissible(p, c):
                out.append(frozenset(c))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _gf(ideals):
    counts = {}
    for i in ideals:
        counts[len(i)] = counts.get(len(i), 0) + 1
    return LaurentPoly.from_dict(counts)


def generating_function(p):
    """Sum of q^|I| over admissible ideals."""
    return _gf(admissible_ideals(p))


@dataclass(frozen=True)
class SplitReport:
    with_zero: LaurentPoly  # ideals containing 0, expected q Ub
    without_zero: LaurentPoly  # ideals avoiding 0, expected V'b
    expected_with_zero: LaurentPoly
    expected_without_zero: LaurentPoly

    @property
    def ok(self):
        return self.with_zero == self.expected_with_zero and self.without_zero == self.expected_without_zero


def shape_word(shape):
    from .qgroup import GroupWord

    letters = []
    for a in shape:
        letters += [("R", a), ("J", 1)]
    return GroupWord(tuple(letters))


def normalized_trace(shape):
    """t^-(m-1)/2 Tr(R^a1 J ... R^am J), exact."""
    from .qgroup import eval_word

    M = eval_word(shape_word(shape))
    tr = M.unit.apply(M.a + M.d)
    return tr.div_exact(T ** ((len(shape) - 1) // 2))


def split_check(shape):
    """Ideals containing 0 give q Ub, ideals avoiding 0 give V'b, read off the
    matrix t^m [[q Ub, U'b], [q Vb, V'b]] of the odd expansion."""
    from .contfrac import CFExpansion, factorization_shape

    p = build(shape)
    ideals = admissible_ideals(p)
    core = factorization_shape(CFExpansion("positive", shape)).matrix
    return SplitReport(
        _gf(i for i in ideals if 0 in i),
        _gf(i for i in ideals if 0 not in i),
        core.a,
        core.d,
    )


def odd_shapes(max_sum, max_len=None):
    """Every shape of odd length >= 3 with positive entries summing to at most max_sum."""
    out = []

    def rec(prefix, total):
        n = len(prefix)
        if n >= 3 and n % 2 == 1:
            out.append(tuple(prefix))
        if max_len is not None and n >= max_len:
            return
        for a in range(1, max_sum - total + 1):
            rec(prefix + [a], total + a)

    rec([], 0)
    return out
