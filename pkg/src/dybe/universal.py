"""Truncated universal fusion matrix, its inverse, and the operator Q(lambda).

Coefficients live in ``QQ(lambda)(h)``: a series of kind ``"J"`` stands for
``sum_n f^n (x) g_n(h) e^n`` and one of kind ``"Q"`` for
``sum_n e^n g_n(h) f^n``.  Moving ``h`` past powers of ``e`` and ``f`` uses
``g(h) e^k = e^k g(h + 2k)`` and ``g(h) f^k = f^k g(h - 2k)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import sl2
from .errors import NonGenericLambda, TruncationError
from .fusion_exchange import WeightedMatrix
from .operators import Operator
from .ratfield import FractionField, RatFunc, compose_affine, evaluate, shift
from .scalars import Rat, factorial, is_rational, pochhammer

LAMBDA = FractionField("lambda")
LAMBDA_H = FractionField("h", LAMBDA)


def _symbols():
    lam = LAMBDA_H.const(LAMBDA.gen())
    return lam, LAMBDA_H.gen()


@dataclass(frozen=True)
class TruncatedUniversal:
    order: int
    terms: tuple
    kind: str = "J"

    def __getitem__(self, n):
        return self.terms[n]

    def __len__(self):
        return len(self.terms)


def universal_J(N: int) -> TruncatedUniversal:
    lam, h = _symbols()
    return TruncatedUniversal(
        N, tuple((-1) ** n / (factorial(n) * pochhammer(lam - h + n + 1, n)) for n in range(N + 1)), "J"
    )


def universal_J_inv(N: int) -> TruncatedUniversal:
    lam, h = _symbols()
    return TruncatedUniversal(
        N, tuple(1 / (factorial(n) * pochhammer(lam - h + 2, n)) for n in range(N + 1)), "J"
    )


def universal_Q(N: int) -> TruncatedUniversal:
    lam, h = _symbols()
    return TruncatedUniversal(
        N, tuple(1 / (factorial(n) * pochhammer(lam + h + n + 1, n)) for n in range(N + 1)), "Q"
    )


def product(U: TruncatedUniversal, V: TruncatedUniversal) -> TruncatedUniversal:
    """``U V`` for J-type series, recollected as ``sum_n f^n (x) c_n(h) e^n``.

    ``(f^l (x) g_l e^l)(f^k (x) g'_k e^k) = f^{l+k} (x) g_l(h) g'_k(h - 2l) e^{l+k}``.
    """
    if U.kind != "J" or V.kind != "J":
        raise ValueError("product is defined here for J-type series")
    N = min(U.order, V.order)
    out = []
    for n in range(N + 1):
        acc = LAMBDA_H.zero()
        for l in range(n + 1):
            acc = acc + U[l] * shift(V[n - l], -2 * l)
        out.append(acc)
    return TruncatedUniversal(N, tuple(out), "J")


def is_unit(U: TruncatedUniversal) -> bool:
    return U[0] == 1 and all(not c for c in U.terms[1:])


def universal_product_check(N: int) -> bool:
    J, Jinv = universal_J(N), universal_J_inv(N)
    return is_unit(product(J, Jinv)) and is_unit(product(Jinv, J))


def _lambda_value(val, lam):
    """Specialise a QQ(lambda) element to the requested parameter."""
    if isinstance(lam, RatFunc) and lam.field.var == "lambda" and lam.field.depth == 1:
        if lam == lam.field.gen():
            return val
    if not isinstance(val, RatFunc):
        return val
    try:
        return evaluate(val, lam)
    except ArithmeticError as exc:
        raise NonGenericLambda(f"non-generic λ={lam}: {exc}") from None


def apply_universal(U: TruncatedUniversal, delta: int, gamma: int, lam=None) -> WeightedMatrix:
    """Matrix of a J-type series on ``V_delta (x) V_gamma``; ``h`` reads the weight of the right factor."""
    if U.kind != "J":
        raise ValueError("apply_universal expects a J-type series")
    if U.order < min(delta, gamma):
        raise TruncationError("truncation below module depth")
    if lam is None:
        lam = LAMBDA.gen()
    if is_rational(lam):
        lam = Rat(lam)
    cols = {}
    for l in range(delta + 1):
        for k in range(gamma + 1):
            col = {}
            for n in range(min(l, gamma - k, U.order) + 1):
                fw = sl2.act_power("f", n, sl2.IrrepVector(delta, l))
                ev = sl2.act_power("e", n, sl2.IrrepVector(gamma, k))
                if fw is None or ev is None:
                    continue
                g = evaluate(U[n], ev.weight)
                val = _lambda_value(g, lam) * fw.coefficient * ev.coefficient
                col[(fw.k, ev.k)] = val
            cols[(l, k)] = col
    return WeightedMatrix.from_operator(Operator((delta, gamma), cols), lam, "first")


# --- Q operator ----------------------------------------------------------------


def q_operator_eigenvalue(gamma: int, k: int, lam):
    """Eigenvalue of ``Q(lam)`` on ``v(gamma, k)``: ``(-lam-k-1)_k / (-lam+gamma-2k)_k``."""
    if not 0 <= k <= gamma:
        raise ValueError("need 0 <= k <= gamma")
    if is_rational(lam):
        lam = Rat(lam)
    den = pochhammer(-lam + gamma - 2 * k, k)
    if not den:
        raise NonGenericLambda(f"non-generic λ={lam}")
    return pochhammer(-lam - k - 1, k) / den


def q_operator_direct(gamma: int, k: int, lam, Q: TruncatedUniversal | None = None):
    """Eigenvalue from the series ``sum_n e^n c_n(h) f^n`` applied through the sl(2) action."""
    if Q is None:
        Q = universal_Q(k)
    if is_rational(lam):
        lam = Rat(lam)
    total = Rat(0)
    v = sl2.IrrepVector(gamma, k)
    for n in range(min(k, Q.order) + 1):
        w = sl2.act_power("f", n, v)
        if w is None:
            continue
        c = _lambda_value(evaluate(Q[n], w.weight), lam)
        back = sl2.act_power("e", n, sl2.IrrepVector(gamma, w.k, w.coefficient * c))
        if back is not None:
            total = total + back.coefficient
    return total


def q_operator_diagonal(gamma: int, lam):
    return [q_operator_eigenvalue(gamma, k, lam) for k in range(gamma + 1)]


# --- words in e, f and functions of h ---------------------------------------------


def antipode_inverse(word):
    """``S^{-1}`` of a word: reverse it, ``e -> -e``, ``f -> -f``, ``g(h) -> g(-h)``."""
    out = []
    for letter, val in reversed(word):
        if letter in ("e", "f"):
            out.append((letter, val))
            if val % 2:
                out.append(("g", LAMBDA_H.const(-1)))
        elif letter == "g":
            out.append(("g", compose_affine(val, -1, 0)))
        else:
            raise ValueError(f"unknown letter {letter!r}")
    return out


def normal_order(word):
    """Bring a word to ``e^a c(h) f^b``; every ``e`` must precede every ``f``."""
    a, b = 0, 0
    c = LAMBDA_H.one()
    for letter, val in word:
        if letter == "e":
            if b:
                raise ValueError("word needs e-f reordering, which is not supported")
            c = shift(c, 2 * val)
            a += val
        elif letter == "f":
            b += val
        else:
            c = c * shift(val, 2 * b)
    return a, c, b


def q_from_J(J: TruncatedUniversal) -> TruncatedUniversal:
    """Apply ``m o P o (1 (x) S^{-1})`` to each term ``f^n (x) g_n(h) e^n``."""
    out = []
    for n, g in enumerate(J.terms):
        left = [("f", n)]
        right = [("g", g), ("e", n)]
        a, c, b = normal_order(antipode_inverse(right) + left)
        assert a == b == n
        out.append(c)
    return TruncatedUniversal(J.order, tuple(out), "Q")
