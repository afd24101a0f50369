"""Dense univariate polynomial kernels over an arbitrary coefficient field.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  Coefficients only need the
field operators ``+ - * /`` and truthiness (nonzero test).

This is the reference implementation; ``_poly_cy.pyx`` mirrors it
function by function.
"""


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    res = list(a)
    for i in range(len(b)):
        res[i] = res[i] + b[i]
    if len(a) == len(b):
        return trim(res)
    return tuple(res)


def sub(a, b):
    la, lb = len(a), len(b)
    if lb == 0:
        return a
    n = la if la > lb else lb
    res = []
    for i in range(n):
        if i < la:
            if i < lb:
                res.append(a[i] - b[i])
            else:
                res.append(a[i])
        else:
            res.append(-b[i])
    if la == lb:
        return trim(res)
    return tuple(res)


def neg(a):
    return tuple([-c for c in a])


def scale(a, c):
    if not c:
        return ()
    return tuple([x * c for x in a])


def mul(a, b):
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return ()
    if la == 1:
        c = a[0]
        return tuple([c * x for x in b])
    if lb == 1:
        c = b[0]
        return tuple([x * c for x in a])
    res = [None] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            t = ai * b[j]
            k = i + j
            r = res[k]
            res[k] = t if r is None else r + t
    zero = a[0] - a[0]
    return trim([zero if r is None else r for r in res])


def divmod_(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    lb = len(b)
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < lb:
        return (), a
    inv = 1 / b[-1]
    rem = list(a)
    dq = len(a) - lb
    quot = [None] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + lb - 1] * inv
        quot[k] = c
        if c:
            for j in range(lb - 1):
                rem[k + j] = rem[k + j] - c * b[j]
    return trim(quot), trim(rem[: lb - 1])


def exquo(a, b):
    """Exact quotient; the caller guarantees ``b`` divides ``a``."""
    if len(b) == 1:
        inv = 1 / b[0]
        return tuple([x * inv for x in a])
    return divmod_(a, b)[0]


def monic(a):
    if not a:
        return a
    lc = a[-1]
    if lc == 1:
        return a
    inv = 1 / lc
    res = [x * inv for x in a[:-1]]
    res.append(lc * inv)
    return tuple(res)


def gcd(a, b):
    """Monic greatest common divisor; ``gcd((), ()) == ()``."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return monic(a)
    if len(b) == 1:
        one = b[0] / b[0]
        return (one,)
    while b:
        r = divmod_(a, b)[1]
        a, b = b, monic(r) if r else r
    return monic(a)


def evaluate(a, x):
    """Horner evaluation at ``x``; ``x`` may live in an extension of the coefficient field."""
    if not a:
        return None
    acc = a[-1]
    for i in range(len(a) - 2, -1, -1):
        acc = acc * x + a[i]
    return acc


def taylor_shift(a, c):
    """Coefficients of ``a(x + c)``."""
    n = len(a)
    if n <= 1 or not c:
        return a
    res = list(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            res[j] = res[j] + c * res[j + 1]
    return trim(res)


def compose_linear(a, s, t):
    """Coefficients of ``a(s*x + t)``."""
    res = taylor_shift(a, t) if t else a
    if s == 1:
        return res
    out = []
    p = s ** 0
    for x in res:
        out.append(x * p)
        p = p * s
    return trim(out)
__all__ = ["trim", "add", "sub", "neg", "scale", "mul", "divmod_", "exquo", "monic", "gcd", "evaluate", "taylor_shift", "compose_linear"]
