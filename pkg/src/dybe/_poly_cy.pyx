# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled dense polynomial kernels; same contract as ``_poly_py``."""

__all__ = ["trim", "add", "sub", "neg", "scale", "mul", "divmod_", "exquo",
           "monic", "gcd", "evaluate", "taylor_shift", "compose_linear"]


cdef tuple _trim_list(list a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


cpdef tuple trim(a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    if n == len(a) and type(a) is tuple:
        return <tuple>a
    return tuple(a[:n])


cpdef tuple add(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef list res
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    if lb == 0:
        return a
    res = list(a)
    for i in range(lb):
        res[i] = res[i] + b[i]
    if la == lb:
        return _trim_list(res)
    return tuple(res)


cpdef tuple sub(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, n
    cdef list res
    if lb == 0:
        return a
    n = la if la > lb else lb
    res = [None] * n
    for i in range(n):
        if i < la:
            if i < lb:
                res[i] = a[i] - b[i]
            else:
                res[i] = a[i]
        else:
            res[i] = -b[i]
    if la == lb:
        return _trim_list(res)
    return tuple(res)


cpdef tuple neg(tuple a):
    return tuple([-c for c in a])


cpdef tuple scale(tuple a, c):
    if not c:
        return ()
    return tuple([x * c for x in a])


cpdef tuple mul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, k
    cdef list res
    cdef object ai, t, r, c
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
            if r is None:
                res[k] = t
            else:
                res[k] = r + t
    zero = a[0] - a[0]
    for k in range(la + lb - 1):
        if res[k] is None:
            res[k] = zero
    return _trim_list(res)


cpdef tuple divmod_(tuple a, tuple b):
    cdef Py_ssize_t lb = len(b), la = len(a), dq, k, j
    cdef list rem, quot
    cdef object inv, c
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return (), a
    inv = 1 / b[lb - 1]
    rem = list(a)
    dq = la - lb
    quot = [None] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + lb - 1] * inv
        quot[k] = c
        if c:
            for j in range(lb - 1):
                rem[k + j] = rem[k + j] - c * b[j]
    return _trim_list(quot), _trim_list(rem[:lb - 1])


cpdef tuple exquo(tuple a, tuple b):
    cdef object inv
    if len(b) == 1:
        inv = 1 / b[0]
        return tuple([x * inv for x in a])
    return divmod_(a, b)[0]


cpdef tuple monic(tuple a):
    cdef Py_ssize_t n = len(a), i
    cdef object lc, inv
    cdef list res
    if n == 0:
        return a
    lc = a[n - 1]
    if lc == 1:
        return a
    inv = 1 / lc
    res = [None] * n
    for i in range(n - 1):
        res[i] = a[i] * inv
    res[n - 1] = lc * inv
    return tuple(res)


cpdef tuple gcd(tuple a, tuple b):
    cdef tuple r
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 0:
        return monic(a)
    if len(b) == 1:
        return (b[0] / b[0],)
    while len(b):
        r = divmod_(a, b)[1]
        a = b
        b = monic(r) if len(r) else r
    return monic(a)


cpdef object evaluate(tuple a, x):
    cdef Py_ssize_t i, n = len(a)
    cdef object acc
    if n == 0:
        return None
    acc = a[n - 1]
    for i in range(n - 2, -1, -1):
        acc = acc * x + a[i]
    return acc


cpdef tuple taylor_shift(tuple a, c):
    cdef Py_ssize_t n = len(a), i, j
    cdef list res
    if n <= 1 or not c:
        return a
    res = list(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            res[j] = res[j] + c * res[j + 1]
    return _trim_list(res)


cpdef tuple compose_linear(tuple a, s, t):
    cdef tuple res
    cdef list out
    cdef object p
    res = taylor_shift(a, t) if t else a
    if s == 1:
        return res
    out = []
    p = s ** 0
    for x in res:
        out.append(x * p)
        p = p * s
    return _trim_list(out)
