"""Property checks behind ``dybe verify-all``.

Each check takes a dimension cap (``None`` keeps its default bound) and a
seeded :class:`random.Random`, and returns a boolean.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import fusion_exchange as fx
from . import hyperg, intertwine, trace, universal
from .ratfield import FractionField, evaluate
from .scalars import Rat

LAMBDA = FractionField("lambda")


def _cap(default: int, cap):
    return default if cap is None else min(default, cap)


def _lam():
    return LAMBDA.gen()


def inverse_pair(cap, rng) -> bool:
    L, top = _lam(), _cap(5, cap)
    return all(
        fx.inverse_pair_block(L, g, s, fx.fusion_range(d, g, s))
        for g in range(top + 1)
        for d in range(top + 1)
        for s in range(d + g + 1)
    )


def fusion_oracle(cap, rng) -> bool:
    L, top = _lam(), _cap(3, cap)
    return all(
        fx.assemble_J(d, g, L) == fx.fusion_from_intertwiners(d, g, L)
        for g in range(top + 1)
        for d in range(top + 1)
    )


def intertwiner_oracle(cap, rng) -> bool:
    L, top = _lam(), _cap(5, cap)
    for g in range(top + 1):
        for k in range(g + 1):
            closed = intertwine.intertwiner_table(g, k, L, n_max=g + 1)
            oracle = intertwine.intertwiner_table(g, k, L, n_max=g + 1, oracle=True)
            if closed.table != oracle.table:
                return False
    return True


def exchange_closed_forms(cap, rng) -> bool:
    L, top = _lam(), _cap(4, cap)
    for g in range(top + 1):
        for d in range(top + 1):
            for s in range(d + g + 1):
                r = fx.exchange_range(d, g, s)
                for m in r:
                    for n in r:
                        c = fx.exchange_C(m, n, s, L, g, d)
                        if s <= d and fx.exchange_C_small_s(m, n, s, L, g, d) != c:
                            return False
                        if s >= d and fx.exchange_C_large_s(m, n, s, L, g, d) != c:
                            return False
    return True


def r_inverse_biorthogonality(cap, rng) -> bool:
    L, top = _lam(), _cap(4, cap)
    for g in range(top + 1):
        for d in range(top + 1):
            if not fx.r_inverse_holds(d, g, L):
                return False
            if not all(fx.biorthogonality_check(g, d, s, L) for s in range(min(g, d) + 1)):
                return False
    return True


def racah_identification(cap, rng) -> bool:
    L, top = _lam(), _cap(3, cap)
    return all(fx.racah_identification_holds(L, g, d) for g in range(top + 1) for d in range(top + 1))


def qdybe(cap, rng) -> bool:
    L, top = _lam(), _cap(2, cap)
    r = range(top + 1)
    return all(fx.qdybe_check(a, b, c, L) for a in r for b in r for c in r)


def universal_identities(cap, rng) -> bool:
    top = _cap(4, cap)
    if not universal.universal_product_check(10):
        return False
    L = _lam()
    for g in range(top + 1):
        for d in range(top + 1):
            N = g + d
            if universal.apply_universal(universal.universal_J(N), d, g) != fx.assemble_J(d, g, L):
                return False
            if universal.apply_universal(universal.universal_J_inv(N), d, g) != fx.assemble_J_inv(d, g, L):
                return False
    return True


def q_operator(cap, rng) -> bool:
    L, top = _lam(), _cap(6, cap)
    for g in range(top + 1):
        for k in range(g + 1):
            if universal.q_operator_direct(g, k, L) != universal.q_operator_eigenvalue(g, k, L):
                return False
    return universal.q_from_J(universal.universal_J(4)).terms == universal.universal_Q(4).terms


def _even_upto(top):
    return [g for g in range(0, top + 1, 2)]


def trace_pipeline(cap, rng) -> bool:
    gammas = _even_upto(_cap(4, cap))
    return (
        all(trace.psi_series_check(g, 8) and trace.psi_forms_agree(g) for g in gammas)
        and all(trace.trace_forms_agree(g) and trace.weighted_F_series_check(g) for g in _even_upto(_cap(6, cap)))
    )


def dual_mr(cap, rng) -> bool:
    gammas = _even_upto(_cap(4, cap))
    deltas = range(_cap(3, cap) + 1)
    if not all(trace.mr_check(d, g) for d in deltas for g in gammas):
        return False
    for g in gammas:
        if dict(trace.mr_operator(1, g).terms) != trace.mr_delta_one_expected(g):
            return False
        if not trace.mr_matches_contiguous(g):
            return False
    return all(trace.contiguous_check(n) for n in range(4))


def _random_rat(rng, lo=-20, hi=20, den=12):
    return Rat(rng.randint(lo, hi), rng.randint(1, den))


def hypergeometric_lemmas(cap, rng) -> bool:
    L = _lam()
    b = FractionField("b").gen()
    for n in range(11):
        if hyperg.chu_vandermonde(n, 2 * L + 1, L + Rat(1, 2)) != hyperg.eval_terminating(
            hyperg.hyp((-n, 2 * L + 1), (L + Rat(1, 2),))
        ):
            return False
        if hyperg.vanishing_2f1(n, b) != (1 if n == 0 else 0):
            return False
        if hyperg.vanishing_3f2(n, b) != (1 if n == 0 else 0):
            return False
    for _ in range(50):
        n = rng.randint(0, 10)
        bb = _random_rat(rng)
        c = _random_rat(rng) + Rat(1, 97)  # never a nonpositive integer below n
        try:
            direct = hyperg.eval_terminating(hyperg.hyp((-n, bb), (c,)))
        except hyperg.LowerParameterCollision:
            continue
        if hyperg.chu_vandermonde(n, bb, c) != direct:
            return False
    top = _cap(3, cap)
    return all(
        fx.whipple_chain_holds(m, n, s, L, g, d)
        for g in range(top + 1)
        for d in range(top + 1)
        for s in range(min(g, d) + 1)
        for m in range(s + 1)
        for n in range(s + 1)
    )


def specialization(cap, rng) -> bool:
    """Symbolic exchange matrices evaluated at random rational points agree with direct rational runs."""
    top = _cap(3, cap)
    L = _lam()
    for _ in range(3):
        lam0 = _random_rat(rng) + Rat(1, 101)
        d, g = rng.randint(0, top), rng.randint(0, top)
        sym = fx.assemble_R(d, g, L).to_operator().map_entries(lambda v: evaluate(v, lam0))
        if sym != fx.assemble_R(d, g, lam0).to_operator():
            return False
    return True


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable


CHECKS = (
    Check("inverse-pair", inverse_pair),
    Check("fusion-oracle", fusion_oracle),
    Check("intertwiner-oracle", intertwiner_oracle),
    Check("exchange-closed-forms", exchange_closed_forms),
    Check("r-inverse-biorthogonality", r_inverse_biorthogonality),
    Check("racah-identification", racah_identification),
    Check("qdybe", qdybe),
    Check("universal-identities", universal_identities),
    Check("q-operator", q_operator),
    Check("trace-pipeline", trace_pipeline),
    Check("dual-mr", dual_mr),
    Check("hypergeometric-lemmas", hypergeometric_lemmas),
    Check("specialization", specialization),
)


@dataclass(frozen=True)
class Result:
    index: int
    name: str
    passed: bool
    seconds: float
    error: str | None = None


def run_suite(cap=None, seed: int = 0):
    """Run every check in order; each gets its own RNG derived from ``seed`` and its index."""
    for i, check in enumerate(CHECKS, 1):
        rng = random.Random(f"{seed}:{i}")
        t0 = time.perf_counter()
        error = None
        try:
            ok = bool(check.run(cap, rng))
        except Exception as exc:  # a crash is reported as a failure of that check
            ok, error = False, f"{type(exc).__name__}: {exc}"
        yield Result(i, check.name, ok, time.perf_counter() - t0, error)
