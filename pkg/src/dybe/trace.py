"""Weighted trace functions for ``V_gamma`` and the dual Macdonald-Ruijsenaars check.

All bodies live in ``QQ(mu)(u)`` with ``u = exp(lambda/2)``.  The
transcendental factor ``exp(+-lambda mu / 2)`` is never formed; the sign is
kept in :attr:`TraceElement.prefactor`.  Shifting ``mu -> mu + nu`` in a body
of ``F`` therefore costs an extra factor ``u^(-nu)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fusion_exchange import exchange_C
from .hyperg import eval_terminating, hyp
from .intertwine import coeff_closed
from .ratfield import FractionField, Poly, expand_at_infinity, substitute_inner
from .scalars import Rat, pochhammer
from .universal import q_operator_eigenvalue

MU = FractionField("mu")
MU_U = FractionField("u", MU)


def _mu():
    return MU.gen()


def _u():
    return MU_U.gen()


def _w():
    """The argument ``(1 - u^2)^(-1)`` of the terminating forms."""
    u = _u()
    return 1 / (1 - u * u)


def _z():
    """``exp(-lambda) = u^(-2)``."""
    u = _u()
    return 1 / (u * u)


def _half(gamma: int) -> int:
    if gamma < 0 or gamma % 2:
        raise ValueError(f"gamma must be even and nonnegative, got {gamma}")
    return gamma // 2


def _lift(x):
    return MU_U.coerce(x)


def hyp2f1(a, b, c, z):
    """Terminating ``2F1(a, b; c; z)`` as an element of ``QQ(mu)(u)``."""
    return _lift(eval_terminating(hyp((_lift(a), _lift(b)), (_lift(c),), z)))


@dataclass(frozen=True)
class TraceElement:
    gamma: int
    body: object
    prefactor: int

    def shifted(self, nu: int):
        """Body after ``mu -> mu + nu``, including the factor from the exponential prefactor."""
        body = substitute_inner(self.body, 1, nu)
        return body * _u() ** (self.prefactor * nu)


# --- characters --------------------------------------------------------------


@dataclass(frozen=True)
class Character:
    delta: int
    laurent: dict

    def value(self):
        u = _u()
        total = MU_U.zero()
        for j, c in sorted(self.laurent.items()):
            total = total + c * u ** j
        return total

    def is_palindromic(self) -> bool:
        return all(self.laurent.get(-j) == c for j, c in self.laurent.items())


def character(delta: int) -> Character:
    return Character(delta, {-delta + 2 * k: Rat(1) for k in range(delta + 1)})


def weyl_denominator():
    u = _u()
    return u - 1 / u


def weyl_quotient_holds(delta: int) -> bool:
    u = _u()
    return character(delta).value() * weyl_denominator() == u ** (delta + 1) - u ** (-(delta + 1))


# --- Psi -------------------------------------------------------------------------


def psi(gamma: int) -> TraceElement:
    """``Psi_gamma`` body ``(1 - u^-2)^-1 2F1(-gamma/2, gamma/2 + 1; -mu; (1 - u^2)^-1)``."""
    g = _half(gamma)
    mu = _mu()
    body = hyp2f1(-g, g + 1, -mu, _w()) / (1 - _z())
    return TraceElement(gamma, body, +1)


def psi_pfaff(gamma: int):
    """The Pfaff-transformed form, rewritten through Euler's transformation so it terminates.

    ``(1 - z)^(gamma/2) 2F1(gamma/2 - mu, gamma/2 + 1; -mu; z)`` equals
    ``(1 - z)^(-gamma/2 - 1) 2F1(-gamma/2, -mu - gamma/2 - 1; -mu; z)``.
    """
    g = _half(gamma)
    mu, z = _mu(), _z()
    return hyp2f1(-g, -mu - g - 1, -mu, z) * (1 - z) ** (-g - 1)


def psi_forms_agree(gamma: int) -> bool:
    return psi(gamma).body == psi_pfaff(gamma)


def psi_series(gamma: int, order: int):
    """Coefficients of ``u^(-2n)``, ``n = 0..order``, in the expansion of the body at ``u = oo``."""
    exp = expand_at_infinity(psi(gamma).body, 2 * order)
    return [exp.get(-2 * n, MU.zero()) for n in range(order + 1)]


def psi_series_check(gamma: int, order: int = 8) -> bool:
    """The expansion must reproduce ``c[n, n]`` of the intertwiner for ``v(gamma, gamma/2)``."""
    g = _half(gamma)
    exp = expand_at_infinity(psi(gamma).body, 2 * order)
    if any(j > 0 or (j % 2 and c) for j, c in exp.items()):
        return False
    mu = _mu()
    return all(
        psi_series(gamma, order)[n] == coeff_closed(n, n, mu, gamma, g) for n in range(order + 1)
    )


# --- F ---------------------------------------------------------------------------


def _f_prefactor(g: int):
    mu = _mu()
    return (-1) ** g * pochhammer(mu + 1, g) / pochhammer(-mu + 1, g)


def weighted_F(gamma: int) -> TraceElement:
    g = _half(gamma)
    mu = _mu()
    body = _f_prefactor(g) * hyp2f1(-g, g + 1, mu + 1, _w())
    return TraceElement(gamma, body, -1)


def weighted_F_pipeline(gamma: int):
    """``Q^-1(-mu - 1) Psi(lambda, -mu - 1) delta(lambda)`` with the prefactor peeled off.

    ``exp(lambda (-mu - 1) / 2) = exp(-lambda mu / 2) u^-1``, so the body picks up ``u^-1``.
    """
    g = _half(gamma)
    mu = _mu()
    q = q_operator_eigenvalue(gamma, g, -mu - 1)
    psi_body = substitute_inner(psi(gamma).body, -1, -1)
    return psi_body / (q * _u()) * weyl_denominator()


def weighted_F_euler(gamma: int):
    """Terminating rewrite of ``(1 - z)^(gamma/2 + 1) 2F1(gamma/2 + mu + 1, gamma/2 + 1; mu + 1; z)``.

    Euler's transformation gives ``(1 - z)^(-gamma/2) 2F1(-gamma/2, mu - gamma/2; mu + 1; z)``.
    """
    g = _half(gamma)
    mu, z = _mu(), _z()
    return _f_prefactor(g) * hyp2f1(-g, mu - g, mu + 1, z) * (1 - z) ** (-g)


def _series_product(a_coeffs, b_coeffs, order):
    return [sum((a_coeffs[i] * b_coeffs[n - i] for i in range(n + 1)), MU.zero()) for n in range(order + 1)]


def _binomial_series(p: int, order: int):
    """Coefficients of ``(1 - z)^p`` as a power series in ``z``."""
    out, c = [], Rat(1)
    for n in range(order + 1):
        out.append(MU.coerce(c))
        c = c * (n - p) / (n + 1)
    return out


def _hyp_series(a, b, c, order: int):
    """Leading coefficients of a possibly non-terminating ``2F1`` in ``z``."""
    out, t = [], MU.one()
    for n in range(order + 1):
        out.append(t)
        t = t * (a + n) * (b + n) / ((c + n) * (n + 1))
    return out


def weighted_F_series_check(gamma: int, order: int = 8) -> bool:
    """Compare the non-terminating form, term by term in ``z = u^-2``, with the body of ``F``."""
    g = _half(gamma)
    mu = _mu()
    raw = _series_product(_binomial_series(g + 1, order), _hyp_series(g + mu + 1, g + 1, mu + 1, order), order)
    pre = _f_prefactor(g)
    exp = expand_at_infinity(weighted_F(gamma).body, 2 * order)
    return all(exp.get(-2 * n, MU.zero()) == pre * raw[n] for n in range(order + 1))


def trace_forms_agree(gamma: int) -> bool:
    F = weighted_F(gamma).body
    return F == weighted_F_pipeline(gamma) and F == weighted_F_euler(gamma)


# --- difference operator ----------------------------------------------------------


@dataclass(frozen=True)
class MRDifferenceOperator:
    delta: int
    gamma: int
    terms: tuple  # (shift, coefficient in QQ(mu))


def mr_operator(delta: int, gamma: int) -> MRDifferenceOperator:
    g = _half(gamma)
    lam = -_mu() - 1
    terms = []
    for s in range(g, g + delta + 1):
        terms.append((-delta - gamma + 2 * s, exchange_C(g, g, s, lam, gamma, delta)))
    return MRDifferenceOperator(delta, gamma, tuple(terms))


def mr_sides(delta: int, gamma: int):
    F = weighted_F(gamma)
    lhs = MU_U.zero()
    for nu, coeff in mr_operator(delta, gamma).terms:
        lhs = lhs + MU_U.coerce(coeff) * F.shifted(nu)
    return lhs, character(delta).value() * F.body


def mr_check(delta: int, gamma: int) -> bool:
    lhs, rhs = mr_sides(delta, gamma)
    return lhs == rhs


def mr_delta_one_expected(gamma: int):
    """Coefficients for ``delta = 1`` keyed by shift: ``1`` at ``+1`` and the quotient below at ``-1``."""
    g = _half(gamma)
    mu = _mu()
    return {1: MU.one(), -1: (mu - g - 1) * (mu + g) / ((mu - 1) * mu)}


# --- contiguous relation ------------------------------------------------------------

B_FIELD = FractionField("b")
BC_FIELD = FractionField("c", B_FIELD)


def _poly_2f1(n: int, b, c, z):
    """``2F1(-n, b; c; z)`` with polynomial dependence on ``z``."""
    total, t = z ** 0, z ** 0
    for k in range(n):
        t = t * z * ((-n + k) * (b + k) / ((c + k) * (k + 1)))
        total = total + t
    return total


def contiguous_relation(n: int, b=None, last_has_z: bool = True):
    """Left side of the three-term relation in ``c`` for ``2F1(-n, b; c; z)``; it should vanish.

    The ``F(c + 1)`` term carries a factor ``z``.  Passing ``last_has_z=False``
    drops it, which gives a relation that fails already for ``n = 0``.
    """
    c = BC_FIELD.gen()
    b = BC_FIELD.coerce(B_FIELD.gen() if b is None else b)
    a = -n
    z = Poly((BC_FIELD.zero(), BC_FIELD.one()), "z", BC_FIELD)
    one = z ** 0
    F = lambda cc: _poly_2f1(n, b, cc, z)  # noqa: E731
    return (
        F(c - 1) * (c * (c - 1)) * (z - one)
        + F(c) * (one * (c * (c - 1)) - z * (c * (2 * c - a - b - 1)))
        + F(c + 1) * ((c - a) * (c - b)) * (z if last_has_z else one)
    )


def contiguous_check(n: int, b=None, last_has_z: bool = True) -> bool:
    return contiguous_relation(n, b, last_has_z).is_zero()


def mr_matches_contiguous(gamma: int) -> bool:
    """For ``delta = 1`` the MR relation, divided by the common prefactors, is the contiguous relation.

    With ``c = mu + 1``, ``a = -gamma/2``, ``b = gamma/2 + 1`` and ``z = (1 - u^2)^-1``
    both relations are linear in ``2F1(c - 1)``, ``2F1(c)``, ``2F1(c + 1)``; their
    coefficient vectors must be proportional.
    """
    g = _half(gamma)
    mu, u = _mu(), _u()
    z = _w()
    lift = MU_U.coerce
    c = lift(mu + 1)
    a, b = -g, g + 1
    contiguous = [c * (c - 1) * (z - 1), c * (c - 1 - (2 * c - a - b - 1) * z), (c - a) * (c - b) * z]
    # F(mu + nu) = pre(mu + nu) 2F1(c + nu); the MR relation reads
    # sum coeff_nu u^-nu pre(mu + nu) 2F1(c + nu) - (u + u^-1) pre(mu) 2F1(c) = 0
    ops = dict(mr_operator(1, gamma).terms)
    pre = MU_U.coerce(_f_prefactor(g))
    mr = [
        lift(ops[-1]) * u * substitute_inner(pre, 1, -1),
        -(u + 1 / u) * pre,
        lift(ops[1]) / u * substitute_inner(pre, 1, 1),
    ]
    ratio = mr[2] / contiguous[2]
    return all(m == ratio * k for m, k in zip(mr, contiguous))
