"""Univariate polynomials and reduced rational functions over a coefficient field.

Fields form towers of depth at most two::

    QQ                      rationals
    FractionField("lambda") QQ(lambda)
    FractionField("u", FractionField("mu"))   QQ(mu)(u)

A :class:`RatFunc` is kept reduced (numerator and denominator coprime) with a
monic denominator, so two elements are equal exactly when their stored
coefficient tuples are equal.
"""
from __future__ import annotations

import re
from fractions import Fraction

from . import polykernel as K
from .scalars import Rat, is_rational, rat


class FieldError(ArithmeticError):
    pass


class EvaluationError(FieldError):
    """Raised when a rational function is evaluated at one of its poles."""


class RationalField:
    """The base field QQ."""

    depth = 0
    var = None
    base = None

    def zero(self):
        return Rat(0)

    def one(self):
        return Rat(1)

    def coerce(self, x):
        if is_rational(x):
            return Rat(x) if not isinstance(x, Fraction) else rat(x)
        if isinstance(x, RatFunc):
            c = x.constant_value()
            if c is not None:
                return self.coerce(c)
        raise TypeError(f"cannot coerce {type(x).__name__} into QQ")

    def contains(self, x):
        return is_rational(x)

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_get_qq, ())


QQ = RationalField()


def _get_qq():
    return QQ


class FractionField:
    """Field of rational functions in ``var`` over ``base``."""

    __slots__ = ("var", "base", "depth", "_one", "_zero")

    def __init__(self, var: str, base=QQ):
        if base.depth >= 2:
            raise FieldError("rational-function towers deeper than two levels are not supported")
        if var == base.var:
            raise FieldError(f"variable {var!r} already used by the base field")
        self.var = var
        self.base = base
        self.depth = base.depth + 1
        self._one = None
        self._zero = None

    def __eq__(self, other):
        return (
            isinstance(other, FractionField)
            and self.var == other.var
            and self.base == other.base
        )

    def __hash__(self):
        return hash((self.var, self.base))

    def __repr__(self):
        return f"{self.base!r}({self.var})"

    def __reduce__(self):
        return (FractionField, (self.var, self.base))

    def variables(self):
        names = [self.var]
        if self.base.depth:
            names = self.base.variables() + names
        return names

    def zero(self):
        if self._zero is None:
            self._zero = RatFunc._raw(self, (), (self.base.one(),))
        return self._zero

    def one(self):
        if self._one is None:
            self._one = RatFunc._raw(self, (self.base.one(),), (self.base.one(),))
        return self._one

    def gen(self):
        b = self.base
        return RatFunc._raw(self, (b.zero(), b.one()), (b.one(),))

    def const(self, c):
        c = self.base.coerce(c)
        return RatFunc._raw(self, (c,) if c else (), (self.base.one(),))

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.field == self:
                return x
            if self.base.depth and x.field == self.base or x.field.depth < self.depth:
                return self.const(x)
            c = x.constant_value()
            if c is not None:
                return self.const(c)
            raise TypeError(f"cannot coerce element of {x.field!r} into {self!r}")
        if is_rational(x):
            return self.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def contains(self, x):
        return isinstance(x, RatFunc) and x.field == self

    def poly(self, coeffs):
        """Polynomial in ``var`` with the given coefficients (lowest first)."""
        return Poly([self.base.coerce(c) for c in coeffs], self.var, self.base)

    def from_polys(self, num, den=None):
        if isinstance(num, Poly):
            num = num.coeffs
        if den is None:
            den = (self.base.one(),)
        elif isinstance(den, Poly):
            den = den.coeffs
        return RatFunc.from_tuples(self, tuple(num), tuple(den))

    def parse(self, text):
        return parse_ratfunc(text, self)


def field_of(*xs):
    """Smallest field among those of ``xs`` that contains all of them."""
    best = QQ
    for x in xs:
        f = x.field if isinstance(x, RatFunc) else QQ
        if f.depth > best.depth:
            best = f
    return best


class Poly:
    """Dense polynomial in one named variable with coefficients in ``ring``."""

    __slots__ = ("coeffs", "var", "ring")

    def __init__(self, coeffs, var, ring=QQ):
        self.coeffs = K.trim(tuple(coeffs))
        self.var = var
        self.ring = ring

    def _check(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise FieldError(f"variable mismatch: {self.var} vs {other.var}")
            return other.coeffs
        c = self.ring.coerce(other)
        return (c,) if c else ()

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        try:
            return self.coeffs == self._check(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __add__(self, other):
        return Poly(K.add(self.coeffs, self._check(other)), self.var, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        return Poly(K.sub(self.coeffs, self._check(other)), self.var, self.ring)

    def __rsub__(self, other):
        return Poly(K.sub(self._check(other), self.coeffs), self.var, self.ring)

    def __neg__(self):
        return Poly(K.neg(self.coeffs), self.var, self.ring)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly(K.mul(self.coeffs, self._check(other)), self.var, self.ring)
        try:
            c = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return Poly(K.scale(self.coeffs, c), self.var, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly((self.ring.one(),), self.var, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        q, r = K.divmod_(self.coeffs, self._check(other))
        return Poly(q, self.var, self.ring), Poly(r, self.var, self.ring)

    def __call__(self, x):
        v = K.evaluate(self.coeffs, x)
        return self.ring.zero() if v is None else v

    def shift(self, c):
        return Poly(K.taylor_shift(self.coeffs, self.ring.coerce(c)), self.var, self.ring)

    def __str__(self):
        return render_poly(self.coeffs, self.var)

    def __repr__(self):
        return f"Poly({self})"


class RatFunc:
    """Reduced quotient ``num/den`` of polynomials in ``field.var``."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den=None):
        rf = field.from_polys(num, den)
        self.field = rf.field
        self.num = rf.num
        self.den = rf.den
        self._hash = None

    @classmethod
    def _raw(cls, field, num, den):
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_tuples(cls, field, num, den):
        num = K.trim(num)
        den = K.trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return field.zero()
        g = K.gcd(num, den)
        if len(g) > 1:
            num = K.exquo(num, g)
            den = K.exquo(den, g)
        return cls._normalized(field, num, den)

    @classmethod
    def _normalized(cls, field, num, den):
        lc = den[-1]
        if lc != 1:
            inv = 1 / lc
            num = K.scale(num, inv)
            den = K.monic(den)
        return cls._raw(field, num, den)

    # --- structure -----------------------------------------------------
    @property
    def numerator(self) -> Poly:
        return Poly(self.num, self.field.var, self.field.base)

    @property
    def denominator(self) -> Poly:
        return Poly(self.den, self.field.var, self.field.base)

    def constant_value(self):
        """The value in the base field if this is a constant, else None."""
        if len(self.den) == 1 and len(self.num) <= 1:
            return self.num[0] if self.num else self.field.base.zero()
        return None

    def is_polynomial(self):
        return len(self.den) == 1

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc) and other.field == self.field:
            return self.num == other.num and self.den == other.den
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self._hash is None:
            c = self.constant_value()
            self._hash = hash(c) if c is not None else hash((self.field, self.num, self.den))
        return self._hash

    def _coerce_pair(self, other):
        if isinstance(other, RatFunc):
            if other.field == self.field:
                return self, other
            if other.field.depth > self.field.depth:
                return other.field.coerce(self), other
        return self, self.field.coerce(other)

    # --- arithmetic ----------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _add(a, b)

    def __radd__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _add(b, a)

    def __sub__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _add(a, -b)

    def __rsub__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _add(b, -a)

    def __neg__(self):
        return RatFunc._raw(self.field, K.neg(self.num), self.den)

    def __mul__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _mul(a, b)

    def __rmul__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _mul(b, a)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("zero denominator")
        return RatFunc._normalized(self.field, self.den, self.num)

    def __truediv__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _mul(a, b.inv())

    def __rtruediv__(self, other):
        try:
            a, b = self._coerce_pair(other)
        except TypeError:
            return NotImplemented
        return _mul(b, a.inv())

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        if n == 0:
            return self.field.one()
        return RatFunc._raw(self.field, _ppow(self.num, n), _ppow(self.den, n))

    # --- substitution --------------------------------------------------
    def __call__(self, x0):
        return evaluate(self, x0)

    def shift(self, c):
        return shift(self, c)

    def map_coefficients(self, fn):
        """Apply ``fn`` to every base-field coefficient and re-reduce."""
        num = tuple(fn(c) for c in self.num)
        den = tuple(fn(c) for c in self.den)
        return RatFunc.from_tuples(self.field, num, den)

    # --- display -------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"RatFunc[{self.field!r}]({self})"

    def __reduce__(self):
        return (RatFunc._raw, (self.field, self.num, self.den))


def _ppow(a, n):
    result = (a[0] ** 0,) if a else ()
    base = a
    while n:
        if n & 1:
            result = K.mul(result, base)
        base = K.mul(base, base)
        n >>= 1
    return result


def _add(x, y):
    if not x.num:
        return y
    if not y.num:
        return x
    f = x.field
    a, b, c, d = x.num, x.den, y.num, y.den
    if b == d:
        num = K.add(a, c)
        if not num:
            return f.zero()
        if len(b) == 1:
            return RatFunc._raw(f, num, b)
        g = K.gcd(num, b)
        if len(g) > 1:
            return RatFunc._normalized(f, K.exquo(num, g), K.exquo(b, g))
        return RatFunc._raw(f, num, b)
    if len(b) == 1:
        return RatFunc._raw(f, K.add(K.mul(a, d), c), d)
    if len(d) == 1:
        return RatFunc._raw(f, K.add(a, K.mul(c, b)), b)
    g = K.gcd(b, d)
    if len(g) == 1:
        num = K.add(K.mul(a, d), K.mul(c, b))
        if not num:
            return f.zero()
        return RatFunc._raw(f, num, K.mul(b, d))
    b1 = K.exquo(b, g)
    d1 = K.exquo(d, g)
    t = K.add(K.mul(a, d1), K.mul(c, b1))
    if not t:
        return f.zero()
    g2 = K.gcd(t, g)
    if len(g2) > 1:
        t = K.exquo(t, g2)
        d = K.exquo(d, g2)
    return RatFunc._normalized(f, t, K.mul(b1, d))


def _mul(x, y):
    if not x.num or not y.num:
        return x.field.zero()
    f = x.field
    a, b, c, d = x.num, x.den, y.num, y.den
    if len(d) > 1 and len(a) > 1:
        g1 = K.gcd(a, d)
        if len(g1) > 1:
            a = K.exquo(a, g1)
            d = K.exquo(d, g1)
    if len(b) > 1 and len(c) > 1:
        g2 = K.gcd(c, b)
        if len(g2) > 1:
            c = K.exquo(c, g2)
            b = K.exquo(b, g2)
    return RatFunc._normalized(f, K.mul(a, c), K.mul(b, d))


# --- substitution --------------------------------------------------------


def evaluate(f, x0):
    """Exact value of ``f`` at ``x0``; raises :class:`EvaluationError` at a pole."""
    if not isinstance(f, RatFunc):
        return f
    den = K.evaluate(f.den, x0)
    if not den:
        raise EvaluationError(f"evaluation at pole: {f} at {f.field.var} = {x0}")
    num = K.evaluate(f.num, x0)
    if num is None:
        return den * 0
    return num / den


def shift(f, c):
    """``f(x + c)`` where ``x`` is the variable of ``f``'s field."""
    if not isinstance(f, RatFunc):
        return f
    if not c:
        return f
    c = f.field.base.coerce(c)
    num = K.taylor_shift(f.num, c)
    den = K.taylor_shift(f.den, c)
    return RatFunc._raw(f.field, num, den)


def compose_affine(f, s, t):
    """``f(s*x + t)`` for a nonzero base-field scalar ``s``."""
    if not isinstance(f, RatFunc):
        return f
    base = f.field.base
    s = base.coerce(s)
    t = base.coerce(t)
    if not s:
        raise FieldError("affine substitution with zero slope")
    num = K.compose_linear(f.num, s, t)
    den = K.compose_linear(f.den, s, t)
    return RatFunc._normalized(f.field, num, den)


def substitute_inner(f, s, t):
    """Apply ``y -> s*y + t`` to the inner variable ``y`` of a two-level tower element."""
    if not isinstance(f, RatFunc):
        return f
    if f.field.depth == 1:
        return compose_affine(f, s, t)
    return f.map_coefficients(lambda c: compose_affine(c, s, t))


# --- rendering -----------------------------------------------------------


def _render_coeff(c):
    if isinstance(c, RatFunc):
        k = c.constant_value()
        if k is None:
            if c.is_polynomial():
                return f"({render_poly(c.num, c.field.var)})", False
            return f"({render(c)})", False
        c = k
    q = rat(c)
    if q < 0:
        return str(-q), True
    return str(q), False


def render_poly(coeffs, var):
    """Render lowest-first coefficients as ``"3*x^2 - x + 1/2"`` (decreasing degree)."""
    if not coeffs:
        return "0"
    parts = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if not c:
            continue
        body, negative = _render_coeff(c)
        if deg == 0:
            term = body
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            term = mono if body == "1" else f"{body}*{mono}"
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f" - {term}" if negative else f" + {term}")
    return "".join(parts)


def render(f):
    """Canonical ``"(<num>)/(<den>)"`` form; rationals render as plain ``p/q``."""
    if not isinstance(f, RatFunc):
        return str(rat(f))
    v = f.field.var
    return f"({render_poly(f.num, v)})/({render_poly(f.den, v)})"


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(?:([A-Za-z_]\w*)(?:\s*\^\s*(\d+))?)?\s*"
)


def parse_poly(text, var, ring=QQ):
    """Parse a polynomial over QQ as produced by :func:`render_poly`."""
    if ring.depth:
        raise FieldError("parsing is only supported for polynomials over QQ")
    s = text.strip()
    if s == "0":
        return Poly((), var, ring)
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial term at {s[pos:]!r}")
        sign, num, name, power = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator before {s[pos:]!r}")
        if num is None and name is None:
            raise ValueError(f"empty term in {text!r}")
        if name is not None and name != var:
            raise ValueError(f"unexpected variable {name!r} (expected {var!r})")
        c = Rat(Fraction(num)) if num is not None else Rat(1)
        if sign == "-":
            c = -c
        deg = 0 if name is None else int(power or 1)
        coeffs[deg] = coeffs.get(deg, Rat(0)) + c
        pos = m.end()
        first = False
    top = max(coeffs) if coeffs else -1
    return Poly([coeffs.get(i, Rat(0)) for i in range(top + 1)], var, ring)


def parse_ratfunc(text, field):
    """Inverse of :func:`render` for fields over QQ."""
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m is None:
        return field.coerce(rat(s))
    num = parse_poly(m.group(1), field.var, field.base)
    den = parse_poly(m.group(2), field.var, field.base)
    return field.from_polys(num, den)


# --- expansions ------------------------------------------------------------


def expand_at_infinity(f, order):
    """Laurent coefficients of ``f`` in powers of ``1/x`` as ``x -> oo``.

    Returns ``{exponent: coeff}`` for exponents from ``deg(f)`` down to
    ``-order`` (inclusive), exponent meaning the power of ``x``.
    """
    zero = f.field.base.zero()
    if not f.num:
        return {}
    dn, dd = len(f.num) - 1, len(f.den) - 1
    top = dn - dd
    # f = x^top * N(t)/D(t) with t = 1/x, N, D the reversed coefficient lists
    N = list(reversed(f.num))
    D = list(reversed(f.den))
    nterms = top + order + 1
    if nterms <= 0:
        return {}
    inv0 = 1 / D[0]
    series = []
    for k in range(nterms):
        acc = N[k] if k < len(N) else zero
        for j in range(1, min(k, len(D) - 1) + 1):
            acc = acc - D[j] * series[k - j]
        series.append(acc * inv0)
    return {top - k: series[k] for k in range(nterms)}
