from fractions import Fraction

import pytest
from hypothesis import strategies as st

from bisectorc.bivariate import bipoly_eval_q, bisector_cubic
from bisectorc.polynomial import QPoly


def rationals(min_value=None, max_value=None, max_denominator=50):
    return st.fractions(min_value=min_value, max_value=max_value, max_denominator=max_denominator)


def qpolys(max_degree=4):
    return st.lists(rationals(-20, 20), max_size=max_degree + 1).map(QPoly)


def f_at(q) -> QPoly:
    return bipoly_eval_q(bisector_cubic(), Fraction(q))


@pytest.fixture
def f1():
    return f_at(1)


@pytest.fixture
def f2():
    return f_at(2)


@pytest.fixture
def f_half():
    return f_at(Fraction(1, 2))
