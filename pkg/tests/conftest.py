import random

import pytest
from hypothesis import strategies as st

from qproj.laurent import LaurentPoly, parse


def P(text):
    return parse(text)


polys = st.builds(
    LaurentPoly,
    st.lists(st.integers(-6, 6), min_size=0, max_size=6),
    st.integers(-4, 4),
)

rationals = st.builds(
    lambda a, b: __import__("fractions").Fraction(a, b),
    st.integers(-25, 25),
    st.integers(1, 25),
)


@pytest.fixture
def rng():
    return random.Random(12345)
