import random

import pytest
from hypothesis import given, strategies as st

from dybe.hyperg import (
    BalanceError,
    HypergeometricError,
    LowerParameterCollision,
    chu_vandermonde,
    eval_terminating,
    hyp,
    is_balanced,
    termination_order,
    vanishing_2f1,
    vanishing_3f2,
    whipple_transform,
)
from dybe.ratfield import FractionField
from dybe.scalars import Rat, pochhammer, rat

B = FractionField("b").gen()
C = FractionField("c").gen()


def _brute(upper, lower, z=1):
    """Independent term-by-term sum using explicit Pochhammer products."""
    n = termination_order(upper)
    total = Rat(0)
    for k in range(n + 1):
        num = Rat(1)
        for a in upper:
            num = num * pochhammer(a, k)
        den = pochhammer(Rat(1), k)
        for b in lower:
            den = den * pochhammer(b, k)
        total = total + num / den * z ** k
    return total


def test_examples(L):
    assert eval_terminating(hyp((-2, 1), (3,))) == Rat(1, 2)
    assert eval_terminating(hyp((0, B), (C,), Rat(5))) == 1
    # two terms: 1 + (-1)(-2)(1) / (-L - 2)
    assert eval_terminating(hyp((-1, -2, 1), (-L - 2, 1))) == 1 + 2 / (-L - 2) == L / (L + 2)


def test_termination_uses_smallest_bound():
    assert termination_order((-5, -2, Rat(1, 2))) == 2
    assert termination_order((Rat(-1, 2), 3)) is None
    with pytest.raises(HypergeometricError):
        hyp((Rat(1, 2), 1), (2,))


def test_symbolic_upper_never_terminates(L):
    with pytest.raises(HypergeometricError):
        hyp((L, 1), (2,))


def test_lower_parameter_collision():
    with pytest.raises(LowerParameterCollision, match="lower parameter collision"):
        eval_terminating(hyp((-3, 1), (-1,)))
    # the collision after termination is harmless: 1 + (-1)(1)/(-1)
    assert eval_terminating(hyp((-1, 1), (-1,))) == 2


@pytest.mark.parametrize("n,b,c,expected", [(0, 5, 7, 1), (2, 1, 3, Rat(1, 2))])
def test_chu_vandermonde_examples(n, b, c, expected):
    assert chu_vandermonde(n, b, c) == expected


def test_chu_vandermonde_vanishes_when_b_equals_c():
    assert chu_vandermonde(1, C, C) == 0


def test_chu_vandermonde_symbolic(L):
    for n in range(11):
        for b, c in [(2 * L + 1, L + Rat(1, 2)), (L, -L + 3), (-L - 4, 2 * L)]:
            assert chu_vandermonde(n, b, c) == eval_terminating(hyp((-n, b), (c,)))


def test_chu_vandermonde_random_rationals():
    rng = random.Random(2024)
    checked = 0
    while checked < 50:
        n = rng.randint(0, 10)
        b = Rat(rng.randint(-30, 30), rng.randint(1, 9))
        c = Rat(rng.randint(-30, 30), rng.randint(1, 9))
        if not pochhammer(c, n):
            continue  # outside the identity's hypothesis
        direct = _brute((-n, b), (c,))
        assert chu_vandermonde(n, b, c) == direct == eval_terminating(hyp((-n, b), (c,)))
        checked += 1


def test_vanishing_2f1_symbolic():
    for n in range(11):
        assert vanishing_2f1(n, C) == (1 if n == 0 else 0)


def test_vanishing_3f2_symbolic():
    for n in range(11):
        assert vanishing_3f2(n, B) == (1 if n == 0 else 0)


def test_eval_against_brute_force(L):
    for upper, lower in [((-3, L, L + 2), (2 * L, 5)), ((-4, Rat(1, 2), -L), (L + 1, Rat(7, 3)))]:
        assert eval_terminating(hyp(upper, lower)) == _brute(upper, lower)


def test_whipple_trivial():
    pre, out = whipple_transform(hyp((0, 1, 2, 3), (4, 5, -2)))
    assert pre == 1 and eval_terminating(out) == 1


def test_whipple_requires_balance():
    with pytest.raises(BalanceError, match="balance condition violated"):
        whipple_transform(hyp((-2, 1, 2, 3), (4, 5, 6)))


def _balanced(n, a, b, d, e):
    f_ = None
    # choose c so that a + b + c - n + 1 = d + e + f with f fixed below
    f_ = Rat(11, 7)
    c = d + e + f_ + n - 1 - a - b
    return hyp((-n, a, b, c), (d, e, f_))


def test_whipple_random_instance():
    s = _balanced(2, Rat(1, 2), Rat(1, 3), Rat(5, 4), Rat(-7, 3))
    assert is_balanced(s)
    pre, out = whipple_transform(s)
    assert eval_terminating(s) == pre * eval_terminating(out)


@given(
    st.integers(0, 5),
    *[st.fractions(min_value=-9, max_value=9, max_denominator=7).map(rat) for _ in range(4)],
)
def test_whipple_preserves_value(n, a, b, d, e):
    s = _balanced(n, a, b, d, e)
    try:
        lhs = eval_terminating(s)
        pre, out = whipple_transform(s)
        rhs = pre * eval_terminating(out)
    except (LowerParameterCollision, ZeroDivisionError):
        return
    assert lhs == rhs


def test_whipple_symbolic(L):
    s = _balanced(3, L, Rat(2, 5), -L + Rat(1, 3), Rat(9, 2))
    pre, out = whipple_transform(s)
    assert eval_terminating(s) == pre * eval_terminating(out)


def test_whipple_rejects_degenerate_lower_parameter():
    s = _balanced(1, Rat(1), Rat(0), Rat(0), Rat(1))
    with pytest.raises(LowerParameterCollision):
        whipple_transform(s)
