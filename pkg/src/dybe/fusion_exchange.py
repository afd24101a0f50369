"""Fusion matrix, exchange matrix, their inverses and the identities they satisfy.

Blocks are indexed by the total index ``s`` of a basis vector
``v(delta, a) (x) v(gamma, b)`` with ``a + b = s``.  Inside a block the
label ``n`` is the index in the first factor for fusion matrices
(``label="first"``) and in the second factor for exchange matrices
(``label="second"``), following the natural parametrisation of each.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import intertwine
from .errors import NonGenericLambda
from .hyperg import LowerParameterCollision, eval_terminating, hyp, whipple_transform
from .operators import Operator
from .ratfield import RatFunc, render_poly, shift
from .scalars import Rat, factorial, is_rational, pochhammer, rat


def _lam(lam):
    return Rat(lam) if is_rational(lam) else lam


def _div(num, den, what):
    if not den:
        raise NonGenericLambda(f"non-generic λ: {what} vanishes")
    return num / den


# --- triangular fusion entries ---------------------------------------------


def fusion_A(m: int, n: int, lam, gamma, s):
    """Entry ``A[m, n]`` of the upper triangular fusion matrix; zero for ``m > n``."""
    if m > n:
        return Rat(0)
    lam = _lam(lam)
    d = n - m
    num = (-1) ** d * factorial(n) * pochhammer(rat(-gamma + s - n), d)
    den = factorial(d) * factorial(m) * pochhammer(-lam - gamma + 2 * s - 2 * n, d)
    return _div(num, den, "fusion matrix denominator")


def fusion_B(m: int, n: int, lam, gamma, s):
    """Entry ``B[m, n]`` of the inverse of ``A``; zero for ``m > n``."""
    if m > n:
        return Rat(0)
    lam = _lam(lam)
    d = n - m
    num = factorial(n) * pochhammer(rat(-gamma + s - n), d)
    den = factorial(d) * factorial(m) * pochhammer(-lam - gamma + 2 * s - m - n - 1, d)
    return _div(num, den, "inverse fusion matrix denominator")


def fusion_range(delta: int, gamma: int, s: int) -> range:
    """Block labels for the fusion matrix: first-factor index ``n``."""
    return range(max(s - gamma, 0), min(delta, s) + 1)


def exchange_range(delta: int, gamma: int, s: int) -> range:
    """Block labels for the exchange matrix: second-factor index ``n``."""
    return range(max(s - delta, 0), min(gamma, s) + 1)


def inverse_pair_block(lam, gamma, s, indices) -> bool:
    """``A B = B A = 1`` restricted to a contiguous index set."""
    idx = list(indices)
    for m in idx:
        for n in idx:
            ab = sum((fusion_A(m, k, lam, gamma, s) * fusion_B(k, n, lam, gamma, s)
                      for k in range(m, n + 1)), Rat(0))
            ba = sum((fusion_B(m, k, lam, gamma, s) * fusion_A(k, n, lam, gamma, s)
                      for k in range(m, n + 1)), Rat(0))
            want = 1 if m == n else 0
            if ab != want or ba != want:
                return False
    return True


# --- weighted block matrices -------------------------------------------------


@dataclass
class Block:
    s: int
    lo: int
    hi: int
    rows: list

    def __getitem__(self, mn):
        m, n = mn
        return self.rows[m - self.lo][n - self.lo]

    @property
    def size(self):
        return self.hi - self.lo + 1


@dataclass
class WeightedMatrix:
    """Block-diagonal operator on ``V_delta (x) V_gamma``, one block per total index ``s``."""

    delta: int
    gamma: int
    lam: object
    label: str = "first"
    blocks: dict = field(default_factory=dict)

    def block(self, s) -> Block:
        return self.blocks[s]

    def index(self, s, n):
        """Basis index tuple for label ``n`` in block ``s``."""
        return (n, s - n) if self.label == "first" else (s - n, n)

    def to_operator(self) -> Operator:
        cols = {}
        for s, blk in self.blocks.items():
            for n in range(blk.lo, blk.hi + 1):
                col = {}
                for m in range(blk.lo, blk.hi + 1):
                    col[self.index(s, m)] = blk[m, n]
                cols[self.index(s, n)] = col
        return Operator((self.delta, self.gamma), cols)

    @classmethod
    def from_operator(cls, op: Operator, lam, label="first"):
        delta, gamma = op.dims
        rng = fusion_range if label == "first" else exchange_range
        out = cls(delta, gamma, lam, label)
        zero = Rat(0)
        for s in range(delta + gamma + 1):
            r = rng(delta, gamma, s)
            rows = [[op.entry(out.index(s, m), out.index(s, n)) or zero for n in r] for m in r]
            out.blocks[s] = Block(s, r.start, r.stop - 1, rows)
        return out

    def __eq__(self, other):
        if not isinstance(other, WeightedMatrix):
            return NotImplemented
        return self.to_operator() == other.to_operator()

    def to_json(self):
        lam = self.lam
        blocks = []
        for s in sorted(self.blocks):
            blk = self.blocks[s]
            entries = [_entry_pair(blk.rows[i][j]) for i in range(blk.size) for j in range(blk.size)]
            blocks.append({"s": s, "index_range": [blk.lo, blk.hi], "entries": entries})
        return {
            "delta": self.delta,
            "gamma": self.gamma,
            "lambda": "symbolic" if isinstance(lam, RatFunc) else str(rat(lam)),
            "label": self.label,
            "blocks": blocks,
        }

    @classmethod
    def from_json(cls, data, field_):
        lam = field_.gen() if data["lambda"] == "symbolic" else rat(data["lambda"])
        out = cls(data["delta"], data["gamma"], lam, data.get("label", "first"))
        for b in data["blocks"]:
            lo, hi = b["index_range"]
            size = hi - lo + 1
            vals = [_parse_pair(p, field_, data["lambda"] == "symbolic") for p in b["entries"]]
            rows = [vals[i * size:(i + 1) * size] for i in range(size)]
            out.blocks[b["s"]] = Block(b["s"], lo, hi, rows)
        return out

    def to_csv_rows(self):
        yield ["s", "row", "col", "num", "den"]
        for s in sorted(self.blocks):
            blk = self.blocks[s]
            for m in range(blk.lo, blk.hi + 1):
                for n in range(blk.lo, blk.hi + 1):
                    yield [s, m, n, *_entry_pair(blk[m, n])]


def _entry_pair(x):
    if isinstance(x, RatFunc):
        v = x.field.var
        return [render_poly(x.num, v), render_poly(x.den, v)]
    q = rat(x)
    return [str(q.numerator), str(q.denominator)]


def _parse_pair(pair, field_, symbolic):
    from .ratfield import parse_poly

    if not symbolic:
        return rat(f"{pair[0]}/{pair[1]}")
    num = parse_poly(pair[0], field_.var)
    den = parse_poly(pair[1], field_.var)
    return field_.from_polys(num, den)


def _triangular(delta, gamma, lam, entry):
    lam = _lam(lam)
    out = WeightedMatrix(delta, gamma, lam, "first")
    for s in range(delta + gamma + 1):
        r = fusion_range(delta, gamma, s)
        rows = [[entry(m, n, lam, gamma, s) for n in r] for m in r]
        out.blocks[s] = Block(s, r.start, r.stop - 1, rows)
    return out


def assemble_J(delta: int, gamma: int, lam) -> WeightedMatrix:
    return _triangular(delta, gamma, lam, fusion_A)


def assemble_J_inv(delta: int, gamma: int, lam) -> WeightedMatrix:
    return _triangular(delta, gamma, lam, fusion_B)


def fusion_from_intertwiners(delta: int, gamma: int, lam) -> WeightedMatrix:
    """Fusion matrix from composing two intertwiners and reading off the ``x`` component.

    For ``w = v(delta, l)`` and ``v = v(gamma, k)`` the composite sends
    ``x_lambda`` to ``sum_{r,m} c^{lam,gamma,k}[r,0] c^{lam+gamma-2k,delta,l}[m,r]
    f^m x (x) v(delta, l+m-r) (x) v(gamma, k+r)``; the ``m = 0`` part is
    ``J(w (x) v)``.
    """
    lam = _lam(lam)
    cols = {}
    for l in range(delta + 1):
        for k in range(gamma + 1):
            lam2 = lam + gamma - 2 * k
            col = {}
            for r in range(gamma - k + 1):
                first = intertwine.coeff_closed(r, 0, lam, gamma, k)
                if not first:
                    continue
                second = intertwine.coeff_closed(0, r, lam2, delta, l)
                if not second:
                    continue
                col[(l - r, k + r)] = first * second
            cols[(l, k)] = col
    return WeightedMatrix.from_operator(Operator((delta, gamma), cols), lam, "first")


# --- exchange matrix -----------------------------------------------------------


def exchange_C(m: int, n: int, s: int, lam, gamma: int, delta: int):
    """Exchange matrix coefficient as the single sum of ``B`` times ``A`` entries."""
    lam = _lam(lam)
    total = Rat(0)
    for k in range(max(0, s - delta), min(m, n) + 1):
        total = total + fusion_B(s - m, s - k, lam, gamma, s) * fusion_A(k, n, lam, delta, s)
    return total


def exchange_C_small_s(m: int, n: int, s: int, lam, gamma: int, delta: int):
    """Balanced 4F3 closed form, valid for ``s <= delta``."""
    if s > delta:
        raise ValueError("closed form requires s <= delta")
    lam = _lam(lam)
    num = (-1) ** m * pochhammer(Rat(-s), m) * pochhammer(Rat(-gamma), m) * pochhammer(Rat(delta - s + 1), n)
    den = factorial(m) * pochhammer(-lam - gamma + m - 1, m) * pochhammer(-lam - delta + 2 * s - 2 * n, n)
    pre = _div(num, den, "exchange prefactor")
    return pre * _eval(racah_series_small_s(m, n, s, lam, gamma, delta))


def racah_series_small_s(m, n, s, lam, gamma, delta):
    return hyp(
        (-m, -lam - gamma + m - 1, -n, lam + delta - 2 * s + n + 1),
        (-s, -gamma, delta - s + 1),
    )


def racah_series_transposed(m, n, s, lam, gamma, delta):
    """The balanced 4F3 of the inverse-matrix form, upper ``m - s, -lam - delta + s - m - 1, n - s, ...``."""
    return hyp(
        (n - s, lam + gamma - s - n + 1, m - s, -lam - delta + s - m - 1),
        (-s, -delta, gamma - s + 1),
    )


def whipple_chain(m: int, n: int, s: int, lam, gamma: int, delta: int):
    """Two Whipple transforms taking :func:`racah_series_transposed` to the small-``s`` 4F3 with ``m, n`` swapped.

    Returns ``(start, steps, end)`` where ``steps`` lists ``(prefactor, series)``
    after each transform.  Requires ``s <= min(gamma, delta)``.
    """
    if s > min(gamma, delta):
        raise ValueError("the chain is stated for s <= min(gamma, delta)")
    lam = _lam(lam)
    start = racah_series_transposed(m, n, s, lam, gamma, delta)
    pre1, mid = whipple_transform(start)
    a, b, c = lam + delta - 2 * s + m + 1, Rat(n - s), lam + gamma - s - n + 1
    ordered = hyp((-m, a, b, c), (-s, lam + gamma + delta - 2 * s + 2, lam - s + 1))
    if sorted(map(str, ordered.upper)) != sorted(map(str, mid.upper)) or ordered.lower != mid.lower:
        raise AssertionError("first transform did not land on the expected 4F3")
    pre2, end = whipple_transform(ordered)
    return start, [(pre1, mid), (pre2, end)], end


def whipple_chain_holds(m: int, n: int, s: int, lam, gamma: int, delta: int) -> bool:
    start, steps, end = whipple_chain(m, n, s, lam, gamma, delta)
    target = racah_series_small_s(n, m, s, lam, gamma, delta)
    if sorted(map(str, end.upper)) != sorted(map(str, target.upper)) or end.lower != target.lower:
        return False
    (pre1, mid), (pre2, _) = steps
    v0, v1, v2 = _eval(start), _eval(mid), _eval(end)
    return v0 == pre1 * v1 and v1 == pre2 * v2 and v0 == pre1 * pre2 * _eval(target)


def exchange_C_large_s(m: int, n: int, s: int, lam, gamma: int, delta: int):
    """Balanced 4F3 closed form, valid for ``s >= delta``."""
    if s < delta:
        raise ValueError("closed form requires s >= delta")
    lam = _lam(lam)
    t = delta - s
    num = (-1) ** (n + t) * pochhammer(Rat(-delta), m + t) * pochhammer(Rat(s - gamma - delta), m + t) * factorial(n)
    den = (
        pochhammer(lam + gamma - 2 * m + 2, m + t)
        * pochhammer(lam - s + n + 1, n + t)
        * factorial(m + t)
        * factorial(s - delta)
    )
    pre = _div(num, den, "exchange prefactor")
    series = hyp(
        (-m + s - delta, -lam - gamma - delta + s + m - 1, -n + s - delta, lam - s + n + 1),
        (-delta, -gamma - delta + s, s - delta + 1),
    )
    return pre * _eval(series)


def _eval(series):
    try:
        return eval_terminating(series)
    except LowerParameterCollision as exc:
        raise NonGenericLambda(f"non-generic λ: {exc}") from None


def exchange_C_closed(m, n, s, lam, gamma, delta):
    if s <= delta:
        return exchange_C_small_s(m, n, s, lam, gamma, delta)
    return exchange_C_large_s(m, n, s, lam, gamma, delta)


def _swap(op: Operator) -> Operator:
    return op.conjugate_by_permutation((1, 0))


def assemble_R_operator(delta: int, gamma: int, lam) -> Operator:
    """``J_{delta,gamma}^{-1} P J_{gamma,delta} P`` as an operator on ``V_delta (x) V_gamma``."""
    jinv = assemble_J_inv(delta, gamma, lam).to_operator()
    j21 = _swap(assemble_J(gamma, delta, lam).to_operator())
    return jinv @ j21


def assemble_R(delta: int, gamma: int, lam) -> WeightedMatrix:
    lam = _lam(lam)
    return WeightedMatrix.from_operator(assemble_R_operator(delta, gamma, lam), lam, "second")


def assemble_R_inv(delta: int, gamma: int, lam) -> WeightedMatrix:
    """Inverse exchange matrix with block entries ``C^{lam,delta,gamma,s}[s-m, s-n]``."""
    lam = _lam(lam)
    out = WeightedMatrix(delta, gamma, lam, "second")
    for s in range(delta + gamma + 1):
        r = exchange_range(delta, gamma, s)
        rows = [[exchange_C(s - m, s - n, s, lam, delta, gamma) for n in r] for m in r]
        out.blocks[s] = Block(s, r.start, r.stop - 1, rows)
    return out


def exchange_matrix_from_C(delta: int, gamma: int, lam) -> WeightedMatrix:
    lam = _lam(lam)
    out = WeightedMatrix(delta, gamma, lam, "second")
    for s in range(delta + gamma + 1):
        r = exchange_range(delta, gamma, s)
        rows = [[exchange_C(m, n, s, lam, gamma, delta) for n in r] for m in r]
        out.blocks[s] = Block(s, r.start, r.stop - 1, rows)
    return out


def r_inverse_holds(delta: int, gamma: int, lam) -> bool:
    """``R_{delta,gamma}^{-1}`` equals the flip-conjugate of ``R_{gamma,delta}``, and inverts it."""
    r = assemble_R(delta, gamma, lam).to_operator()
    rinv = assemble_R_inv(delta, gamma, lam).to_operator()
    flipped = _swap(assemble_R(gamma, delta, lam).to_operator())
    return rinv == flipped and (r @ rinv).is_identity() and (rinv @ r).is_identity()


# --- Racah polynomials and biorthogonality ---------------------------------------


def racah_eval(m: int, x, alpha, beta, gamma_, delta_):
    """Racah polynomial ``R_m(x(x + gamma_ + delta_ + 1); alpha, beta, gamma_, delta_)``.

    Uses the terminating balanced 4F3
    ``[-m, m+alpha+beta+1, -x, x+gamma_+delta_+1; alpha+1, beta+delta_+1, gamma_+1; 1]``.
    """
    series = hyp(
        (-m, m + alpha + beta + 1, -x, x + gamma_ + delta_ + 1),
        (alpha + 1, beta + delta_ + 1, gamma_ + 1),
    )
    return _eval(series)


def racah_parameters(lam, gamma: int, delta: int, s: int):
    """Askey-scheme parameters ``(alpha, beta, gamma', delta')`` for the exchange 4F3."""
    lam = _lam(lam)
    return (Rat(-gamma - 1), -lam - 1, Rat(-s - 1), lam + delta - s + 1)


def racah_identification_holds(lam, gamma: int, delta: int) -> bool:
    for s in range(0, min(delta, gamma + delta) + 1):
        params = racah_parameters(lam, gamma, delta, s)
        for m in range(0, min(gamma, s) + 1):
            for n in range(0, min(gamma, s) + 1):
                if _eval(racah_series_small_s(m, n, s, lam, gamma, delta)) != racah_eval(m, n, *params):
                    return False
    return True


def biorthogonality_check(gamma: int, delta: int, s: int, lam) -> bool:
    if s > min(gamma, delta):
        raise ValueError("biorthogonality is stated for s <= min(gamma, delta)")
    lam = _lam(lam)
    rng = range(max(0, s - delta), min(gamma, s) + 1)
    left = {(m, x): exchange_C(m, x, s, lam, gamma, delta) for m in rng for x in rng}
    right = {(x, n): exchange_C(s - x, s - n, s, lam, delta, gamma) for x in rng for n in rng}
    for m in range(s + 1):
        for n in range(s + 1):
            total = sum((left[m, x] * right[x, n] for x in rng), Rat(0))
            if total != (1 if m == n else 0):
                return False
    return True


# --- QDYBE -----------------------------------------------------------------------


def _weight(dim, k):
    return -dim + 2 * k


def _embed(build, lam, dims3, slots, shifted, lam_sign=-1) -> Operator:
    """Lift a two-slot operator to three slots, shifting its argument by a weight.

    ``build(lam)`` returns the two-slot operator acting on positions
    ``slots``.  When ``shifted`` is set, the column for a basis vector whose
    spectator slot has weight ``w`` uses the operator at ``lam + lam_sign * w``.
    """
    from .operators import basis

    i, j = slots
    spectator = ({0, 1, 2} - {i, j}).pop()
    base = build(lam)
    cache = {0: base}

    def at(c):
        if c not in cache:
            if isinstance(lam, RatFunc):
                cache[c] = base.map_entries(lambda v: shift(v, c))
            else:
                cache[c] = build(lam + c)
        return cache[c]

    cols = {}
    for b in basis(dims3):
        c = lam_sign * _weight(dims3[spectator], b[spectator]) if shifted else 0
        col = {}
        for (p, q), val in at(c).column((b[i], b[j])).items():
            out = list(b)
            out[i], out[j] = p, q
            col[tuple(out)] = val
        cols[b] = col
    return Operator(dims3, cols)


def qdybe_sides(gamma: int, delta: int, epsilon: int, lam, lam_sign=-1):
    """Both sides of ``R12(lam - h3) R13(lam) R23(lam - h1) = R23(lam) R13(lam - h2) R12(lam)``."""
    lam = _lam(lam)
    dims = (gamma, delta, epsilon)

    def r(a, b):
        return lambda x: assemble_R_operator(a, b, x)

    r12, r13, r23 = r(gamma, delta), r(gamma, epsilon), r(delta, epsilon)
    lhs = (
        _embed(r12, lam, dims, (0, 1), True, lam_sign)
        @ _embed(r13, lam, dims, (0, 2), False)
        @ _embed(r23, lam, dims, (1, 2), True, lam_sign)
    )
    rhs = (
        _embed(r23, lam, dims, (1, 2), False)
        @ _embed(r13, lam, dims, (0, 2), True, lam_sign)
        @ _embed(r12, lam, dims, (0, 1), False)
    )
    return lhs, rhs


def qdybe_check(gamma: int, delta: int, epsilon: int, lam, lam_sign=-1) -> bool:
    lhs, rhs = qdybe_sides(gamma, delta, epsilon, lam, lam_sign)
    return lhs == rhs
