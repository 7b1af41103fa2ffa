import pytest

from qproj.fenceposet import (
    BadShape,
    admissible_ideals,
    admissible_ideals_bruteforce,
    build,
    generating_function,
    normalized_trace,
    odd_shapes,
    split_check,
)

from .conftest import P

PAPER_IDEALS_122 = [
    set(), {0}, {0, 3}, {2, 3}, {0, 2, 3}, {0, 1, 2, 3}, {0, 3, 4, 5}, {0, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5},
]


def test_ideals_of_122_verbatim():
    got = [set(i) for i in admissible_ideals(build((1, 2, 2)))]
    assert got == PAPER_IDEALS_122


def test_gf_of_122():
    assert generating_function(build((1, 2, 2))) == P("1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6")
    assert normalized_trace((1, 2, 2)) == P("1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6")


@pytest.mark.parametrize("shape", odd_shapes(8))
def test_gf_equals_trace_small(shape):
    assert generating_function(build(shape)) == normalized_trace(shape)


@pytest.mark.parametrize("shape", odd_shapes(7))
def test_enumeration_matches_bruteforce(shape):
    p = build(shape)
    assert admissible_ideals(p) == admissible_ideals_bruteforce(p)


@pytest.mark.parametrize("shape", [(1, 2, 2), (2, 1, 3), (1, 1, 1), (3, 1, 1, 2, 1), (2, 2, 2, 2, 2)])
def test_split_by_vertex_zero(shape):
    assert split_check(shape).ok


def test_bad_shapes():
    with pytest.raises(BadShape):
        build((1, 2))
    with pytest.raises(BadShape):
        build((3,))
    with pytest.raises(BadShape):
        build((1, 0, 2))


def test_shape_count():
    # odd compositions of length >= 3 with sum <= 12
    assert len(odd_shapes(12)) == 2036
