"""Coefficients of the intertwining operator ``M_lambda -> M_mu (x) V_gamma``.

For the weight vector ``v = v(gamma, k)`` the intertwiner sends
``f^n x_lambda`` to ``sum_m c[m, n] (f^m x_mu) (x) v(gamma, k + m - n)``.
Two independent routes compute ``c[m, n]``:

* :func:`coeff_closed` -- terminating 3F2 closed forms,
* :func:`coeff_oracle` -- literal expansion of ``f^n`` applied to the image
  of the highest weight vector, using the binomial coproduct rule.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import sl2
from .errors import NonGenericLambda
from .hyperg import LowerParameterCollision, eval_terminating, hyp
from .scalars import Rat, factorial, is_rational, pochhammer


def _lam(lam):
    return Rat(lam) if is_rational(lam) else lam


def m_range(n: int, gamma: int, k: int) -> range:
    """Indices ``m`` with possibly nonzero ``c[m, n]``."""
    return range(max(0, n - k), n + gamma - k + 1)


def _check_range(gamma, k):
    if gamma < 0 or not 0 <= k <= gamma:
        raise ValueError(f"need 0 <= k <= gamma, got gamma={gamma}, k={k}")


def coeff_closed(m: int, n: int, lam, gamma: int, k: int):
    """``c[m, n]`` from the hypergeometric closed forms; zero outside the index range."""
    _check_range(gamma, k)
    lam = _lam(lam)
    if n < 0 or m not in m_range(n, gamma, k):
        return Rat(0)
    if m <= n:
        return coeff_lower(m, n, lam, gamma, k)
    return coeff_upper(m, n, lam, gamma, k)


def coeff_lower(m: int, n: int, lam, gamma: int, k: int):
    """The closed form valid for ``max(0, n - k) <= m <= n``."""
    lam = _lam(lam)
    base = -lam - gamma + 2 * k
    pre = factorial(n) * factorial(k) / (factorial(m) * factorial(n - m) * factorial(k + m - n))
    return _series(hyp((-m, -gamma + k, k + 1), (base, n - m + 1)), lam) * pre


def coeff_upper(m: int, n: int, lam, gamma: int, k: int):
    """The closed form valid for ``n <= m <= n + gamma - k``."""
    lam = _lam(lam)
    base = -lam - gamma + 2 * k
    d = m - n
    den = factorial(d) * pochhammer(base, d)
    if not den:
        raise NonGenericLambda(f"non-generic λ={lam}: ({base})_{d} vanishes")
    pre = (-1) ** d * pochhammer(Rat(-gamma + k), d) / den
    return _series(hyp((-n, -gamma + k + d, k + d + 1), (base + d, d + 1)), lam) * pre


def _series(series, lam):
    try:
        return eval_terminating(series)
    except LowerParameterCollision as exc:
        raise NonGenericLambda(f"non-generic λ={lam}: {exc}") from None


def coeff_specials(lam, gamma: int, k: int):
    """Row ``m -> c[m, 0]`` and column ``n -> c[0, n]`` from their product formulas."""
    _check_range(gamma, k)
    lam = _lam(lam)
    base = -lam - gamma + 2 * k
    row = {}
    for m in range(gamma - k + 1):
        den = factorial(m) * pochhammer(base, m)
        if not den:
            raise NonGenericLambda(f"non-generic λ={lam}: ({base})_{m} vanishes")
        row[m] = (-1) ** m * pochhammer(Rat(-gamma + k), m) / den
    col = {n: factorial(k) / factorial(k - n) for n in range(k + 1)}
    return row, col


def leading_coefficients(lam, gamma: int, k: int):
    """``a_i`` of the highest-weight image, from the recurrence ``a_i i (i - lam + beta - 1) = a_{i-1}``."""
    lam = _lam(lam)
    beta = sl2.weight(gamma, k)
    a = [Rat(1)]
    for i in range(1, gamma - k + 1):
        d = i * (i - lam + beta - 1)
        if not d:
            raise NonGenericLambda(f"non-generic λ={lam}: recurrence denominator vanishes at i={i}")
        a.append(a[-1] / d)
    return a


def oracle_column(n: int, lam, gamma: int, k: int):
    """All ``c[m, n]`` for fixed ``n`` by expanding ``f^n`` applied to the intertwiner image."""
    _check_range(gamma, k)
    a = leading_coefficients(lam, gamma, k)
    # image of x_lambda: sum_i a_i (f^i x) (x) e^i v
    image = []
    for i, ai in enumerate(a):
        w = sl2.act_repeated("e", i, sl2.IrrepVector(gamma, k, Rat(1)))
        if w is not None:
            image.append((i, ai * w.coefficient, w.k))
    column = {}
    for i, coeff, kv in image:
        for j in range(n + 1):
            w = sl2.act_repeated("f", n - j, sl2.IrrepVector(gamma, kv, coeff))
            if w is None:
                continue
            m = i + j
            term = w.coefficient * comb(n, j)
            column[m] = column[m] + term if m in column else term
    return {m: c for m, c in column.items() if c}


def coeff_oracle(m: int, n: int, lam, gamma: int, k: int):
    val = oracle_column(n, lam, gamma, k).get(m)
    if val is None:
        return Rat(0)
    return val


@dataclass(frozen=True)
class IntertwinerCoeffs:
    gamma: int
    k: int
    lam: object
    table: dict = field(repr=False)

    def __getitem__(self, mn):
        return self.table.get(mn, Rat(0))

    def entries(self):
        return sorted(self.table.items(), key=lambda kv: (kv[0][1], kv[0][0]))


def intertwiner_table(gamma: int, k: int, lam, n_max: int | None = None, oracle: bool = False):
    """Coefficient table for ``n = 0..n_max`` (default ``gamma``)."""
    _check_range(gamma, k)
    lam = _lam(lam)
    if n_max is None:
        n_max = gamma
    table = {}
    for n in range(n_max + 1):
        if oracle:
            col = oracle_column(n, lam, gamma, k)
            for m in m_range(n, gamma, k):
                table[(m, n)] = col.get(m, Rat(0))
        else:
            for m in m_range(n, gamma, k):
                table[(m, n)] = coeff_closed(m, n, lam, gamma, k)
    return IntertwinerCoeffs(gamma, k, lam, table)


def recurrence_holds(lam, gamma: int, k: int) -> bool:
    """Rebuild ``a_i`` from the ``n = 0`` column and test the e-annihilation recurrence."""
    lam = _lam(lam)
    beta = sl2.weight(gamma, k)
    a = []
    for m in range(gamma - k + 1):
        c = coeff_closed(m, 0, lam, gamma, k)
        a.append(c / ((-1) ** m * pochhammer(Rat(-gamma + k), m)))
    if a[0] != 1:
        return False
    return all(a[i] * i * (i - lam + beta - 1) == a[i - 1] for i in range(1, len(a)))
