import json

import pytest

from dybe import fusion_exchange as fx
from dybe.errors import NonGenericLambda
from dybe.operators import Operator
from dybe.ratfield import FractionField, evaluate
from dybe.scalars import Rat

LF = FractionField("lambda")


def block(wm, s):
    return wm.blocks[s].rows


# --- triangular fusion entries ---------------------------------------------------


def test_fusion_entry_examples(L):
    assert fx.fusion_A(0, 1, L, 1, 1) == -1 / (L + 1)
    assert fx.fusion_B(0, 1, L, 1, 1) == 1 / (L + 1)
    assert fx.fusion_A(2, 1, L, 3, 2) == 0 and fx.fusion_B(2, 1, L, 3, 2) == 0
    for n in range(4):
        assert fx.fusion_A(n, n, L, 3, 3) == 1 and fx.fusion_B(n, n, L, 3, 3) == 1


def test_row_check(L):
    total = fx.fusion_A(0, 0, L, 1, 1) * fx.fusion_B(0, 1, L, 1, 1) + fx.fusion_A(0, 1, L, 1, 1) * fx.fusion_B(1, 1, L, 1, 1)
    assert total == 0


def test_inverse_pair_all_blocks(L):
    for g in range(6):
        for d in range(6):
            for s in range(d + g + 1):
                assert fx.inverse_pair_block(L, g, s, fx.fusion_range(d, g, s))


def test_inverse_pair_detects_corruption(L):
    # B with a wrong Pochhammer offset is no longer the inverse
    m, n, g, s = 0, 1, 2, 2
    bad = fx.fusion_B(m, n, L + 1, g, s)
    good = fx.fusion_B(m, n, L, g, s)
    assert bad != good
    ab = fx.fusion_A(0, 0, L, g, s) * bad + fx.fusion_A(0, 1, L, g, s) * fx.fusion_B(1, 1, L, g, s)
    assert ab != 0


def test_A_depends_on_differences_only(L):
    for t in range(-2, 4):
        for g in range(4):
            for s in range(g + 1):
                for n in range(4):
                    for m in range(n + 1):
                        assert fx.fusion_A(m, n, L + t, g + t, s + t) == fx.fusion_A(m, n, L, g, s)


def test_non_generic_fusion_entry():
    with pytest.raises(NonGenericLambda, match="non-generic λ"):
        fx.fusion_A(0, 1, Rat(-1), 1, 1)


# --- assembled matrices ---------------------------------------------------------------


def test_assemble_examples(L):
    assert block(fx.assemble_J(0, 0, L), 0) == [[1]]
    assert block(fx.assemble_J(1, 1, L), 1) == [[1, -1 / (L + 1)], [0, 1]]
    assert block(fx.assemble_J_inv(1, 1, L), 1) == [[1, 1 / (L + 1)], [0, 1]]


def test_fusion_from_intertwiners(L):
    for d in range(4):
        for g in range(4):
            assert fx.assemble_J(d, g, L) == fx.fusion_from_intertwiners(d, g, L)


def test_fusion_from_intertwiners_trivial_first_factor(L):
    for g in range(4):
        assert fx.fusion_from_intertwiners(0, g, L).to_operator().is_identity()


def test_J_times_J_inv(L):
    for d in range(4):
        for g in range(4):
            prod = fx.assemble_J(d, g, L).to_operator() @ fx.assemble_J_inv(d, g, L).to_operator()
            assert prod.is_identity()


# --- exchange matrix ------------------------------------------------------------------


def test_exchange_examples(L):
    assert fx.exchange_C(0, 0, 1, L, 1, 1) == 1
    assert fx.exchange_C(0, 1, 1, L, 1, 1) == -1 / (L + 1)
    assert fx.exchange_C(1, 0, 1, L, 1, 1) == 1 / (L + 1)
    assert fx.exchange_C(1, 1, 1, L, 1, 1) == 1 - 1 / (L + 1) ** 2
    R = fx.assemble_R(1, 1, L)
    assert block(R, 0) == [[1]]
    assert block(R, 1) == [[1, -1 / (L + 1)], [1 / (L + 1), 1 - 1 / (L + 1) ** 2]]


def test_exchange_small_s_example(L):
    for m in range(2):
        for n in range(2):
            assert fx.exchange_C(m, n, 1, L, 2, 1) == fx.exchange_C_small_s(m, n, 1, L, 2, 1)


def test_exchange_closed_forms(L):
    for g in range(5):
        for d in range(5):
            for s in range(d + g + 1):
                r = fx.exchange_range(d, g, s)
                for m in r:
                    for n in r:
                        c = fx.exchange_C(m, n, s, L, g, d)
                        if s <= d:
                            assert fx.exchange_C_small_s(m, n, s, L, g, d) == c
                        if s >= d:
                            assert fx.exchange_C_large_s(m, n, s, L, g, d) == c


def test_closed_form_regime_guard(L):
    with pytest.raises(ValueError):
        fx.exchange_C_small_s(0, 0, 3, L, 2, 2)
    with pytest.raises(ValueError):
        fx.exchange_C_large_s(0, 0, 1, L, 2, 2)


def test_R_from_C_matches_product(L):
    for d in range(4):
        for g in range(4):
            assert fx.exchange_matrix_from_C(d, g, L) == fx.assemble_R(d, g, L)


def test_trivial_factor_gives_identity(L):
    for g in range(4):
        assert fx.assemble_R(0, g, L).to_operator().is_identity()
        assert fx.assemble_R(g, 0, L).to_operator().is_identity()


def test_r_inverse(L):
    for d in range(5):
        for g in range(5):
            assert fx.r_inverse_holds(d, g, L)


def test_whipple_chain(L):
    for g in range(4):
        for d in range(4):
            for s in range(min(g, d) + 1):
                for m in range(s + 1):
                    for n in range(s + 1):
                        assert fx.whipple_chain_holds(m, n, s, L, g, d)


# --- Racah and biorthogonality ---------------------------------------------------------


def test_racah_examples(L):
    params = fx.racah_parameters(L, 2, 2, 1)
    assert fx.racah_eval(0, 1, *params) == 1
    assert fx.racah_eval(1, 0, *params) == 1
    assert fx.racah_eval(1, 1, *fx.racah_parameters(L, 1, 1, 1)) == 1 - (L + 1) ** 2


def test_racah_identification(L):
    for g in range(4):
        for d in range(4):
            assert fx.racah_identification_holds(L, g, d)


@pytest.mark.parametrize("g,d,s,lam", [(1, 1, 0, None), (2, 2, 2, None), (3, 2, 2, Rat(5, 7))])
def test_biorthogonality_examples(L, g, d, s, lam):
    assert fx.biorthogonality_check(g, d, s, L if lam is None else lam)


def test_biorthogonality_exhaustive(L):
    for g in range(5):
        for d in range(5):
            for s in range(min(g, d) + 1):
                assert fx.biorthogonality_check(g, d, s, L)


def test_biorthogonality_outside_regime(L):
    with pytest.raises(ValueError):
        fx.biorthogonality_check(1, 2, 2, L)


# --- QDYBE ---------------------------------------------------------------------------------


def test_qdybe_examples(L):
    assert fx.qdybe_check(0, 1, 2, L)
    assert fx.qdybe_check(1, 1, 1, L)
    assert fx.qdybe_check(1, 1, 2, L)


def test_qdybe_all_small(L):
    for a in range(3):
        for b in range(3):
            for c in range(3):
                assert fx.qdybe_check(a, b, c, L)


def test_qdybe_rational_point():
    assert fx.qdybe_check(1, 2, 1, Rat(7, 3))


def test_qdybe_wrong_shift_sign_fails(L):
    assert not fx.qdybe_check(1, 1, 1, L, lam_sign=+1)


# --- serialization ---------------------------------------------------------------------------


def test_json_roundtrip_symbolic(L):
    wm = fx.assemble_R(2, 2, L)
    data = json.loads(json.dumps(wm.to_json()))
    back = fx.WeightedMatrix.from_json(data, LF)
    assert back == wm
    assert back.to_json() == data


def test_json_roundtrip_rational():
    wm = fx.assemble_J(2, 1, Rat(3, 5))
    data = wm.to_json()
    assert data["lambda"] == "3/5"
    assert fx.WeightedMatrix.from_json(data, LF).to_json() == data


def test_json_schema(L):
    data = fx.assemble_R(1, 1, L).to_json()
    assert {"delta", "gamma", "lambda", "blocks"} <= set(data)
    blk = data["blocks"][1]
    assert blk["s"] == 1 and blk["index_range"] == [0, 1]
    assert blk["entries"][1] == ["-1", "lambda + 1"]


def test_specialization_commutes(L):
    lam0 = Rat(11, 4)
    sym = fx.assemble_R(2, 3, L).to_operator().map_entries(lambda v: evaluate(v, lam0))
    assert sym == fx.assemble_R(2, 3, lam0).to_operator()


def test_operator_basics():
    op = Operator.identity((1, 1))
    assert op.is_identity()
    swapped = op.conjugate_by_permutation((1, 0))
    assert swapped == op
