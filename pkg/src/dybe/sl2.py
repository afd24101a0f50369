"""Finite-dimensional irreducible sl(2) modules and their tensor products.

``V_gamma`` has basis ``v(gamma, k)`` of weight ``-gamma + 2k`` for
``k = 0..gamma`` with

    h v_k = (-gamma + 2k) v_k,  f v_k = k v_{k-1},  e v_k = (gamma - k) v_{k+1}.

Vectors in tensor products are sparse maps from index tuples to field
elements; zero coefficients are dropped on construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .scalars import Rat, falling_ratio, pochhammer

GENERATORS = ("e", "f", "h")


@dataclass(frozen=True)
class IrrepVector:
    gamma: int
    k: int
    coefficient: object = Rat(1)

    def __post_init__(self):
        if self.gamma < 0 or not 0 <= self.k <= self.gamma:
            raise ValueError(f"no basis vector k={self.k} in V_{self.gamma}")

    @property
    def weight(self) -> int:
        return -self.gamma + 2 * self.k


def weight(gamma: int, k: int) -> int:
    return -gamma + 2 * k


def act_e(v: IrrepVector):
    if v.k == v.gamma:
        return None
    return IrrepVector(v.gamma, v.k + 1, v.coefficient * (v.gamma - v.k))


def act_f(v: IrrepVector):
    if v.k == 0:
        return None
    return IrrepVector(v.gamma, v.k - 1, v.coefficient * v.k)


def act_h(v: IrrepVector):
    w = v.weight
    if w == 0:
        return None
    return IrrepVector(v.gamma, v.k, v.coefficient * w)


def act_power(x: str, i: int, v: IrrepVector):
    """``x^i . v`` for ``x`` in ``{"e", "f", "h"}``, via the closed power formulas."""
    if i < 0:
        raise ValueError("negative power")
    if v is None:
        return None
    if i == 0:
        return v
    if x == "e":
        if v.k + i > v.gamma:
            return None
        c = (-1) ** i * pochhammer(-v.gamma + v.k, i)
        return IrrepVector(v.gamma, v.k + i, v.coefficient * c)
    if x == "f":
        if i > v.k:
            return None
        return IrrepVector(v.gamma, v.k - i, v.coefficient * falling_ratio(v.k, i))
    if x == "h":
        if v.weight == 0:
            return None
        return IrrepVector(v.gamma, v.k, v.coefficient * Rat(v.weight) ** i)
    raise ValueError(f"unknown generator {x!r}")


_ACT = {"e": act_e, "f": act_f, "h": act_h}


def act_repeated(x: str, i: int, v: IrrepVector):
    """``x^i . v`` by applying the single generator ``i`` times."""
    for _ in range(i):
        if v is None:
            return None
        v = _ACT[x](v)
    return v


# --- sparse vectors ------------------------------------------------------


class Vector:
    """Sparse vector in ``V_{dims[0]} (x) ... (x) V_{dims[-1]}``."""

    __slots__ = ("dims", "terms")

    def __init__(self, dims, terms=None):
        self.dims = tuple(dims)
        self.terms = {}
        if terms:
            for idx, c in terms.items():
                self._accumulate(tuple(idx), c)

    @classmethod
    def basis(cls, dims, idx, coeff=Rat(1)):
        return cls(dims, {tuple(idx): coeff})

    def _accumulate(self, idx, c):
        if not c:
            return
        old = self.terms.get(idx)
        if old is None:
            self.terms[idx] = c
        else:
            new = old + c
            if new:
                self.terms[idx] = new
            else:
                del self.terms[idx]

    def __add__(self, other):
        out = Vector(self.dims, self.terms)
        for idx, c in other.terms.items():
            out._accumulate(idx, c)
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return Vector(self.dims, {i: v * c for i, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Vector) and self.dims == other.dims and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.terms.items()))
        return f"Vector{self.dims}{{{body}}}"


def act_on_factor(x: str, power: int, vec: Vector, factor: int) -> Vector:
    """Apply ``x^power`` to tensor slot ``factor`` of ``vec``."""
    out = Vector(vec.dims)
    g = vec.dims[factor]
    for idx, c in vec.terms.items():
        w = act_power(x, power, IrrepVector(g, idx[factor], c))
        if w is not None:
            new = idx[:factor] + (w.k,) + idx[factor + 1:]
            out._accumulate(new, w.coefficient)
    return out


def act_diagonal(x: str, vec: Vector) -> Vector:
    """Action of one generator through the coproduct ``x (x) 1 + 1 (x) x``."""
    out = Vector(vec.dims)
    for i in range(len(vec.dims)):
        out = out + act_on_factor(x, 1, vec, i)
    return out


def act_h_shifted(vec: Vector, shift) -> Vector:
    """``(h + shift) . vec`` on a single irrep."""
    out = Vector(vec.dims)
    for idx, c in vec.terms.items():
        w = sum(weight(g, k) for g, k in zip(vec.dims, idx))
        out._accumulate(idx, c * (w + shift))
    return out


def leibniz_power(x: str, n: int, vec: Vector) -> Vector:
    """``x^n`` on a two-fold tensor product via the binomial expansion."""
    if len(vec.dims) != 2:
        raise ValueError("binomial coproduct expansion is implemented for two factors")
    out = Vector(vec.dims)
    for j in range(n + 1):
        part = act_on_factor(x, j, vec, 0)
        part = act_on_factor(x, n - j, part, 1)
        out = out + part.scaled(Rat(comb(n, j)))
    return out


def iterated_power(x: str, n: int, vec: Vector) -> Vector:
    for _ in range(n):
        vec = act_diagonal(x, vec)
    return vec


def bracket_checks(gamma: int) -> bool:
    """``[e,f] = h``, ``[h,e] = 2e`` and ``[h,f] = -2f`` on every basis vector of ``V_gamma``."""
    dims = (gamma,)
    for k in range(gamma + 1):
        v = Vector.basis(dims, (k,))
        e = lambda u: act_on_factor("e", 1, u, 0)  # noqa: E731
        f = lambda u: act_on_factor("f", 1, u, 0)  # noqa: E731
        h = lambda u: act_on_factor("h", 1, u, 0)  # noqa: E731
        if e(f(v)) - f(e(v)) != h(v):
            return False
        if h(e(v)) - e(h(v)) != e(v).scaled(2):
            return False
        if h(f(v)) - f(h(v)) != f(v).scaled(-2):
            return False
    return True


def ad_identity_check(n: int, probe: IrrepVector) -> bool:
    """Check ``e f^n = f^n e + n f^(n-1) (h - n + 1)`` on ``probe``."""
    if n < 1:
        raise ValueError("n must be positive")
    dims = (probe.gamma,)
    v = Vector.basis(dims, (probe.k,), probe.coefficient)
    lhs = act_on_factor("e", 1, act_on_factor("f", n, v, 0), 0)
    rhs = act_on_factor("f", n, act_on_factor("e", 1, v, 0), 0)
    tail = act_on_factor("f", n - 1, act_h_shifted(v, 1 - n), 0)
    rhs = rhs + tail.scaled(n)
    return lhs == rhs
