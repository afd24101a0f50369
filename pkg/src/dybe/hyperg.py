"""Terminating generalized hypergeometric series over any exact field.

Parameters may be rationals or rational functions; a series terminates
only through an upper parameter that is a literal nonpositive integer.
"""
from __future__ import annotations

from dataclasses import dataclass

from .scalars import Rat, as_integer, pochhammer


class HypergeometricError(ArithmeticError):
    pass


class LowerParameterCollision(HypergeometricError):
    """A lower Pochhammer symbol vanishes before the series terminates."""


class BalanceError(HypergeometricError):
    pass


@dataclass(frozen=True)
class HypSeries:
    upper: tuple
    lower: tuple
    argument: object = 1

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if termination_order(self.upper) is None:
            raise HypergeometricError(
                "series does not terminate: no upper parameter is a nonpositive integer"
            )

    @property
    def order(self) -> int:
        return termination_order(self.upper)

    def value(self):
        return eval_terminating(self)

    def __str__(self):
        up = ", ".join(str(a) for a in self.upper)
        lo = ", ".join(str(b) for b in self.lower)
        return f"{len(self.upper)}F{len(self.lower)}[{up}; {lo}; {self.argument}]"


def hyp(upper, lower, z=1) -> HypSeries:
    return HypSeries(tuple(upper), tuple(lower), z)


def termination_order(upper):
    """Smallest ``N`` with ``-N`` among the upper parameters, or None."""
    best = None
    for a in upper:
        n = as_integer(a)
        if n is not None and n <= 0 and (best is None or -n < best):
            best = -n
    return best


def terms(s: HypSeries):
    """Yield the terms ``prod (a)_k / (prod (b)_k k!) z^k`` for ``k = 0..N``."""
    term = Rat(1)
    yield term
    z = s.argument
    for k in range(s.order):
        num = Rat(1)
        for a in s.upper:
            num = num * (a + k)
        den = Rat(k + 1)
        for b in s.lower:
            bk = b + k
            if not bk:
                raise LowerParameterCollision(
                    f"lower parameter collision: ({b})_{k + 1} vanishes before termination"
                )
            den = den * bk
        term = term * (num / den)
        if z != 1:
            term = term * z
        yield term


def eval_terminating(s: HypSeries):
    total = Rat(0)
    for t in terms(s):
        total = total + t
    return total


def chu_vandermonde(n: int, b, c):
    """Closed form ``(c-b)_n/(c)_n`` of ``2F1(-n, b; c; 1)``."""
    den = pochhammer(c, n)
    if not den:
        raise LowerParameterCollision(f"({c})_{n} vanishes")
    return pochhammer(c - b, n) / den


def is_balanced(s: HypSeries) -> bool:
    return sum(s.upper, Rat(0)) + 1 == sum(s.lower, Rat(0))


def whipple_transform(s: HypSeries):
    """Whipple's transformation of a terminating balanced 4F3 at unit argument.

    ``s`` must be ordered as ``[-n, a, b, c; d, e, f]``.  Returns
    ``(prefactor, transformed)`` with
    ``transformed = 4F3[-n, a, d-b, d-c; d, 1+a-e-n, 1+a-f-n]`` and
    ``prefactor = (e-a)_n (f-a)_n / ((e)_n (f)_n)``.
    """
    if len(s.upper) != 4 or len(s.lower) != 3:
        raise HypergeometricError("Whipple's transform needs a 4F3")
    if s.argument != 1:
        raise HypergeometricError("Whipple's transform needs unit argument")
    m = as_integer(s.upper[0])
    if m is None or m > 0:
        raise HypergeometricError("first upper parameter must be a nonpositive integer")
    n = -m
    _, a, b, c = s.upper
    d, e, f = s.lower
    if not is_balanced(s):
        raise BalanceError("balance condition violated")
    # a lower parameter hitting zero below order n makes the identity degenerate
    # even when another upper parameter stops the series earlier
    den = pochhammer(d, n) * pochhammer(e, n) * pochhammer(f, n)
    if not den:
        raise LowerParameterCollision("lower parameter collision below the termination order")
    den = pochhammer(e, n) * pochhammer(f, n)
    prefactor = pochhammer(e - a, n) * pochhammer(f - a, n) / den
    out = HypSeries((-n, a, d - b, d - c), (d, 1 + a - e - n, 1 + a - f - n), 1)
    return prefactor, out


def vanishing_2f1(n: int, c):
    """``2F1(-n, c + n - 1; c; 1)``, which is 1 for ``n = 0`` and 0 otherwise."""
    return eval_terminating(hyp((-n, c + n - 1), (c,)))


def vanishing_3f2(n: int, b):
    """``3F2(-n, b, b/2 + 1; b + n + 1, b/2; 1)``, which is 1 for ``n = 0`` and 0 otherwise."""
    return eval_terminating(hyp((-n, b, b / 2 + 1), (b + n + 1, b / 2)))
