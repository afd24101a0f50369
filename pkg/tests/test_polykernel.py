"""The compiled and pure-Python kernels must agree on every operation."""
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from dybe import _poly_py as P
from dybe import polykernel
from dybe.scalars import rat

try:
    from dybe import _poly_cy as C
except ImportError:  # extension not built
    C = None

coeff = st.fractions(min_value=-9, max_value=9, max_denominator=5).map(rat)
poly = st.lists(coeff, max_size=6).map(lambda xs: P.trim(tuple(xs)))
nonzero_poly = poly.filter(bool)

needs_cy = pytest.mark.skipif(C is None, reason="compiled kernel not built")


def test_backend_flag():
    assert polykernel.BACKEND in ("cython", "python")


def test_reference_kernels():
    one, x = (rat(1),), (rat(0), rat(1))
    assert P.mul(P.add(x, one), P.sub(x, one)) == (rat(-1), rat(0), rat(1))
    q, r = P.divmod_((rat(-1), rat(0), rat(1)), P.sub(x, one))
    assert q == (rat(1), rat(1)) and r == ()
    assert P.gcd((rat(-1), rat(0), rat(1)), (rat(1), rat(2), rat(1))) == (rat(1), rat(1))
    assert P.evaluate((rat(1), rat(2), rat(3)), rat(2)) == 17
    assert P.evaluate((), rat(2)) is None
    assert P.taylor_shift((rat(0), rat(0), rat(1)), rat(1)) == (rat(1), rat(2), rat(1))
    assert P.compose_linear((rat(0), rat(0), rat(1)), rat(2), rat(1)) == (rat(1), rat(4), rat(4))


@given(poly, poly, nonzero_poly)
def test_division_identity(a, b, d):
    q, r = P.divmod_(P.mul(a, d), d)
    assert q == a and r == ()
    q, r = P.divmod_(a, d)
    assert P.add(P.mul(q, d), r) == a
    assert len(r) < len(d)


@needs_cy
@settings(max_examples=200)
@given(poly, poly, nonzero_poly, coeff, coeff)
def test_backends_agree(a, b, d, c, t):
    for name in ("add", "sub", "mul"):
        assert getattr(P, name)(a, b) == getattr(C, name)(a, b)
    assert P.neg(a) == C.neg(a)
    assert P.scale(a, c) == C.scale(a, c)
    assert P.divmod_(a, d) == C.divmod_(a, d)
    assert P.exquo(P.mul(a, d), d) == C.exquo(C.mul(a, d), d)
    assert P.monic(d) == C.monic(d)
    assert P.gcd(a, d) == C.gcd(a, d)
    assert P.evaluate(a, c) == C.evaluate(a, c)
    assert P.taylor_shift(a, c) == C.taylor_shift(a, c)
    if c:
        assert P.compose_linear(a, c, t) == C.compose_linear(a, c, t)


def test_pure_python_switch():
    env = dict(os.environ, DYBE_PURE_PYTHON="1")
    code = "from dybe.polykernel import BACKEND; print(BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_pipeline_identical_across_backends():
    code = (
        "from dybe.fusion_exchange import assemble_R; from dybe.ratfield import FractionField;"
        "import json; print(json.dumps(assemble_R(2, 2, FractionField('lambda').gen()).to_json()))"
    )
    outs = []
    for flag in ("1", "0"):
        env = dict(os.environ, DYBE_PURE_PYTHON=flag)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout)
    assert outs[0] == outs[1]
