from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dybe.scalars import Rat, as_integer, binomial, factorial, falling_ratio, is_rational, pochhammer, rat

small_rats = st.fractions(min_value=-20, max_value=20, max_denominator=12).map(rat)


def test_rat_parsing():
    assert rat("3/4") == Rat(3, 4)
    assert rat(" -2/6 ") == Rat(-1, 3)
    assert rat(Fraction(5, 10)) == Rat(1, 2)
    assert rat(7, 14) == Rat(1, 2)


def test_is_rational_rejects_bool_and_float():
    assert is_rational(3) and is_rational(Rat(1, 2)) and is_rational(Fraction(1, 3))
    assert not is_rational(True)
    assert not is_rational(0.5)


def test_as_integer():
    assert as_integer(Rat(4, 2)) == 2
    assert as_integer(Rat(1, 2)) is None
    assert as_integer(-3) == -3
    assert as_integer(False) is None


@pytest.mark.parametrize(
    "a,n,expected",
    [(3, 0, 1), (3, 2, 12), (-2, 3, 0), (Rat(1, 2), 2, Rat(3, 4)), (-4, 2, 12)],
)
def test_pochhammer_values(a, n, expected):
    assert pochhammer(a, n) == expected


def test_pochhammer_negative_order():
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_pochhammer_symbolic(L):
    assert pochhammer(L, 2) == L * (L + 1)
    assert pochhammer(L, 0) == 1


@given(small_rats, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_split(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


def test_factorials():
    assert factorial(0) == 1 and factorial(5) == 120
    assert falling_ratio(5, 2) == 20 and falling_ratio(2, 3) == 0
    assert binomial(5, 2) == 10 and binomial(3, 4) == 0
    with pytest.raises(ValueError):
        factorial(-1)
