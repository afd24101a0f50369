"""Exit criteria: exact equality everywhere, each with its wall-clock bound.

Run with ``pytest -m acceptance -s`` (or directly with ``python``) to see one
PASS/FAIL line per criterion.
"""
import time

import pytest

from dybe import fusion_exchange as fx
from dybe import hyperg, intertwine, trace, universal
from dybe.ratfield import FractionField
from dybe.scalars import Rat

pytestmark = pytest.mark.acceptance

L = FractionField("lambda").gen()
B = FractionField("b").gen()


def inverse_pair():
    return all(
        fx.inverse_pair_block(L, g, s, fx.fusion_range(d, g, s))
        for g in range(6)
        for d in range(6)
        for s in range(d + g + 1)
    )


def fusion_oracle():
    return all(fx.assemble_J(d, g, L) == fx.fusion_from_intertwiners(d, g, L) for g in range(4) for d in range(4))


def intertwiner_oracle():
    for g in range(6):
        for k in range(g + 1):
            closed = intertwine.intertwiner_table(g, k, L, n_max=g + 1)
            oracle = intertwine.intertwiner_table(g, k, L, n_max=g + 1, oracle=True)
            if closed.table != oracle.table:
                return False
    return True


def exchange_closed_forms():
    for g in range(5):
        for d in range(5):
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


def r_inverse_biorthogonality():
    return all(
        fx.r_inverse_holds(d, g, L)
        and all(fx.biorthogonality_check(g, d, s, L) for s in range(min(g, d) + 1))
        for g in range(5)
        for d in range(5)
    )


def racah_identification():
    return all(fx.racah_identification_holds(L, g, d) for g in range(4) for d in range(4))


def qdybe():
    r = range(3)
    return all(fx.qdybe_check(a, b, c, L) for a in r for b in r for c in r)


def universal_identities():
    if not universal.universal_product_check(10):
        return False
    return all(
        universal.apply_universal(universal.universal_J(g + d), d, g) == fx.assemble_J(d, g, L)
        and universal.apply_universal(universal.universal_J_inv(g + d), d, g) == fx.assemble_J_inv(d, g, L)
        for g in range(5)
        for d in range(5)
    )


def q_operator():
    return all(
        universal.q_operator_direct(g, k, L) == universal.q_operator_eigenvalue(g, k, L)
        for g in range(7)
        for k in range(g + 1)
    )


def trace_pipeline():
    return all(trace.psi_series_check(g, 8) for g in (0, 2, 4)) and all(
        trace.weighted_F_pipeline(g) == trace.weighted_F(g).body
        and trace.weighted_F_euler(g) == trace.weighted_F(g).body
        and trace.weighted_F_series_check(g, 8)
        for g in (0, 2, 4)
    )


def dual_mr():
    if not all(trace.mr_check(d, g) for d in range(4) for g in (0, 2, 4)):
        return False
    return all(
        dict(trace.mr_operator(1, g).terms) == trace.mr_delta_one_expected(g) and trace.mr_matches_contiguous(g)
        for g in (0, 2, 4)
    ) and all(trace.contiguous_check(n) for n in range(4))


def hypergeometric_lemmas():
    for n in range(11):
        direct = hyperg.eval_terminating(hyperg.hyp((-n, 2 * L + 1), (L + Rat(1, 2),)))
        if hyperg.chu_vandermonde(n, 2 * L + 1, L + Rat(1, 2)) != direct:
            return False
        if hyperg.vanishing_2f1(n, B) != (1 if n == 0 else 0):
            return False
        if hyperg.vanishing_3f2(n, B) != (1 if n == 0 else 0):
            return False
    return all(
        fx.whipple_chain_holds(m, n, s, L, g, d)
        for g in range(4)
        for d in range(4)
        for s in range(min(g, d) + 1)
        for m in range(s + 1)
        for n in range(s + 1)
    )


CRITERIA = [
    (1, "inverse pair, gamma, delta <= 5", inverse_pair, 1.0),
    (2, "fusion matrix vs intertwiner oracle, gamma, delta <= 3", fusion_oracle, 5.0),
    (3, "intertwiner closed form vs Leibniz oracle, gamma <= 5", intertwiner_oracle, 10.0),
    (4, "exchange closed forms agree, gamma, delta <= 4", exchange_closed_forms, 10.0),
    (5, "R-inverse and biorthogonality, gamma, delta <= 4", r_inverse_biorthogonality, 10.0),
    (6, "Racah identification, gamma, delta <= 3", racah_identification, 2.0),
    (7, "QDYBE, all dims <= 2", qdybe, 60.0),
    (8, "universal identities to N = 10 and apply_universal", universal_identities, 5.0),
    (9, "Q operator closed form vs direct sum, gamma <= 6", q_operator, 1.0),
    (10, "trace pipeline and series", trace_pipeline, 5.0),
    (11, "dual MR equation, delta <= 3", dual_mr, 10.0),
    (12, "hypergeometric lemmas", hypergeometric_lemmas, 2.0),
]


def evaluate(run):
    t0 = time.perf_counter()
    ok = run()
    return ok, time.perf_counter() - t0


def report(number, title, ok, seconds, bound):
    verdict = "PASS" if ok and seconds < bound else "FAIL"
    return f"{verdict} criterion {number}: {title} ({seconds:.2f}s, bound {bound:.0f}s)"


@pytest.mark.parametrize("number,title,run,bound", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, run, bound, capsys):
    ok, seconds = evaluate(run)
    with capsys.disabled():
        print("\n" + report(number, title, ok, seconds, bound))
    assert ok
    assert seconds < bound


if __name__ == "__main__":
    import sys

    failed = 0
    for number, title, run, bound in CRITERIA:
        ok, seconds = evaluate(run)
        line = report(number, title, ok, seconds, bound)
        failed += line.startswith("FAIL")
        print(line)
    sys.exit(1 if failed else 0)
