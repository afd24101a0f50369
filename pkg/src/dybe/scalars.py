"""Exact rational scalars and rising-factorial style combinatorics.

``Rat`` is :class:`gmpy2.mpq` when gmpy2 is importable and
:class:`fractions.Fraction` otherwise.  Both hash and compare like the
builtin numeric tower, so values produced by either are interchangeable
inside a single process.
"""
from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpq as Rat
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rat = Fraction
    HAVE_GMPY2 = False

RATIONAL_TYPES = (int, Fraction, type(Rat(0)))


def rat(x, den=None):
    """Build a ``Rat`` from an int, a Fraction, a ``Rat`` or a ``"p/q"`` string."""
    if den is not None:
        return Rat(x, den)
    if isinstance(x, str):
        return Rat(Fraction(x.strip()))
    if isinstance(x, Fraction):
        return Rat(x.numerator, x.denominator)
    return Rat(x)


def is_rational(x) -> bool:
    return isinstance(x, RATIONAL_TYPES) and not isinstance(x, bool)


def as_integer(x):
    """Return ``x`` as a Python int if it is a rational integer, else None.

    Constant rational functions count as their constant value.
    """
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return x
    if is_rational(x):
        return int(x.numerator) if x.denominator == 1 else None
    const = getattr(x, "constant_value", None)
    if const is not None:
        c = const()
        if c is not None:
            return as_integer(c)
    return None


def pochhammer(a, n: int):
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)`` for any field element ``a``."""
    if n < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {n}")
    if n == 0:
        return Rat(1) if is_rational(a) else a ** 0
    if is_rational(a):
        a = Rat(a)
    result = a
    for i in range(1, n):
        result = result * (a + i)
    return result


def factorial(n: int):
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return Rat(math.factorial(n))


def falling_ratio(k: int, n: int):
    """``k!/(k-n)!`` as a Rat; zero when ``n > k``."""
    if n < 0:
        raise ValueError("negative order")
    if n > k:
        return Rat(0)
    return Rat(math.perm(k, n))


def binomial(n: int, k: int):
    if k < 0 or k > n:
        return Rat(0)
    return Rat(math.comb(n, k))
