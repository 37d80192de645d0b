"""Linear differential operators with rational-function coefficients.

An :class:`OrePoly` is a dense list of :class:`RatFun` coefficients of
powers of a generator, either the derivation ``Dx`` or the Euler operator
``Euler`` (x*d/dx).  Multiplication is noncommutative, driven by the
commutation rules  Dx*f = f*Dx + f'  and  Euler*f = f*Euler + x*f'.

Conversions between the two generator bases use the falling-factorial
identity  x^j Dx^j = E(E-1)...(E-j+1): multiplying an order-r operator by
x^r on the left and expanding yields an Euler-form operator with
polynomial coefficients and the same solution set.  Canonical outputs are
"primitive": polynomial coefficients, jointly integer-primitive, with a
positive leading rational in the leading coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from pseudolin.poly import NEG_INF, Poly
from pseudolin.ratfun import RatFun, common_denominator

GEN_DX = "Dx"
GEN_EULER = "Euler"


def _as_ratfun(c) -> RatFun:
    return c if isinstance(c, RatFun) else RatFun(c)


class OrePoly:
    """Linear differential operator in one generator over Q(x)."""

    __slots__ = ("generator", "coeffs")

    def __init__(self, coeffs=(), generator: str = GEN_DX):
        if generator not in (GEN_DX, GEN_EULER):
            raise ValueError(f"unknown generator {generator!r}")
        cs = [_as_ratfun(c) for c in coeffs]
        n = len(cs)
        while n and cs[n - 1].is_zero():
            n -= 1
        object.__setattr__(self, "coeffs", tuple(cs[:n]))
        object.__setattr__(self, "generator", generator)

    def __setattr__(self, name, value):
        raise AttributeError("OrePoly is immutable")

    @staticmethod
    def zero(generator: str = GEN_DX) -> OrePoly:
        return OrePoly((), generator)

    @staticmethod
    def gen(generator: str = GEN_DX) -> OrePoly:
        return OrePoly((0, 1), generator)

    @staticmethod
    def from_scalar(f, generator: str = GEN_DX) -> OrePoly:
        return OrePoly((f,), generator)

    @property
    def order(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> RatFun:
        return self.coeffs[-1] if self.coeffs else RatFun.zero()

    def coeff(self, j: int) -> RatFun:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else RatFun.zero()

    def _check_gen(self, other: OrePoly):
        if self.generator != other.generator:
            raise ValueError("generator mismatch")

    def __add__(self, other: OrePoly) -> OrePoly:
        self._check_gen(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OrePoly(out, self.generator)

    def __sub__(self, other: OrePoly) -> OrePoly:
        return self + (-other)

    def __neg__(self) -> OrePoly:
        return OrePoly(tuple(-c for c in self.coeffs), self.generator)

    def scale(self, f) -> OrePoly:
        """Left multiplication by a rational function (coefficientwise)."""
        f = _as_ratfun(f)
        return OrePoly(tuple(c * f for c in self.coeffs), self.generator)

    def __mul__(self, other):
        if isinstance(other, OrePoly):
            return ore_mul(self, other)
        return NotImplemented

    def apply(self, f) -> RatFun:
        return ore_apply(self, f)

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return (self.generator == other.generator
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(("OrePoly", self.generator, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.is_zero():
            return "0"
        sym = "Dx" if self.generator == GEN_DX else "E"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            head = f"({c})"
            parts.append(f"{head}*{sym}^{j}" if j else head)
        return " + ".join(parts)

    def __repr__(self):
        return f"OrePoly({str(self)!r}, {self.generator!r})"


def _delta(c: RatFun, generator: str) -> RatFun:
    """The derivation attached to the generator: f' or x*f'."""
    d = c.derivative()
    if generator == GEN_EULER:
        d = d * Poly.x()
    return d


def ore_mul(a: OrePoly, b: OrePoly) -> OrePoly:
    """Noncommutative product a*b (apply b first, then a)."""
    a._check_gen(b)
    gen = a.generator
    if a.is_zero() or b.is_zero():
        return OrePoly.zero(gen)
    # powers[i] = gen^i composed with b, as coefficient lists
    cur = list(b.coeffs)
    out = [RatFun.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if not ca.is_zero():
            for j, cb in enumerate(cur):
                out[j] = out[j] + ca * cb
        if i + 1 < len(a.coeffs):
            nxt = [RatFun.zero()] * (len(cur) + 1)
            for j, cb in enumerate(cur):
                nxt[j + 1] = nxt[j + 1] + cb
                nxt[j] = nxt[j] + _delta(cb, gen)
            cur = nxt
    return OrePoly(out, gen)


def ore_apply(L: OrePoly, f) -> RatFun:
    """Apply the operator to a rational function."""
    f = _as_ratfun(f)
    acc = RatFun.zero()
    g = f
    for j, c in enumerate(L.coeffs):
        if j:
            g = _delta(g, L.generator)
        if not c.is_zero():
            acc = acc + c * g
    return acc


def right_divide(a: OrePoly, b: OrePoly):
    """Right division a = q*b + r with order(r) < order(b)."""
    a._check_gen(b)
    if b.is_zero():
        raise ZeroDivisionError("right division by the zero operator")
    gen = a.generator
    q = OrePoly.zero(gen)
    r = a
    while not r.is_zero() and r.order >= b.order:
        k = r.order - b.order
        factor = r.lc / b.lc
        mono = OrePoly((RatFun.zero(),) * k + (factor,), gen)
        q = q + mono
        r = r - ore_mul(mono, b)
    return q, r


def normalize_primitive(L: OrePoly) -> OrePoly:
    """Canonical form: polynomial coefficients, jointly integer-primitive,
    positive leading rational in the leading coefficient.

    Common polynomial factors are kept (a left factor in Q[x] changes the
    operator); :func:`full_primitive` strips those too.
    """
    if L.is_zero():
        return L
    from math import gcd, lcm

    den = common_denominator(L.coeffs)
    polys = [(c * den).num for c in L.coeffs]
    d = 1
    for p in polys:
        for f in p.coeffs:
            d = lcm(d, f.denominator)
    g = 0
    for p in polys:
        for f in p.coeffs:
            g = gcd(g, int(f * d))
    scale = Fraction(d, g)
    if polys[-1].lc < 0:
        scale = -scale
    return OrePoly(tuple(RatFun(p * scale) for p in polys), L.generator)


def full_primitive(L: OrePoly) -> OrePoly:
    """Like :func:`normalize_primitive` but also divides out the common
    polynomial factor of the coefficients."""
    if L.is_zero():
        return L
    from pseudolin.poly import poly_gcd

    prim = normalize_primitive(L)
    polys = [c.num for c in prim.coeffs]
    g = Poly()
    for p in polys:
        g = poly_gcd(g, p)
        if g.degree == 0:
            break
    if g.degree > 0:
        polys = [p.exact_div(g) for p in polys]
        return normalize_primitive(OrePoly(
            tuple(RatFun(p) for p in polys), L.generator))
    return prim


def _euler_raw(L: OrePoly) -> OrePoly:
    """x^r * L rewritten in the Euler generator, without content clearing."""
    if L.generator != GEN_DX:
        raise ValueError("expected a Dx-generator operator")
    if L.is_zero():
        raise ValueError("cannot convert the zero operator")
    den = common_denominator(L.coeffs)
    polys = [(c * den).num for c in L.coeffs]
    r = len(polys) - 1
    x = Poly.x()
    out = [Poly() for _ in range(r + 1)]
    # falling factorial E(E-1)...(E-l+1) as integer coefficient lists in E
    fall = [Fraction(1)]
    for ell, p in enumerate(polys):
        if ell:
            new = [Fraction(0)] * (len(fall) + 1)
            for j, c in enumerate(fall):
                new[j + 1] += c
                new[j] -= c * (ell - 1)
            fall = new
        if p.is_zero():
            continue
        shift = p * x**(r - ell)
        for j, c in enumerate(fall):
            if c:
                out[j] = out[j] + shift * c
    return OrePoly(tuple(RatFun(p) for p in out), GEN_EULER)


def to_euler(L: OrePoly) -> OrePoly:
    """Rewrite a Dx-operator in the Euler generator (content-cleared).

    The result has polynomial coefficients and the same solution set; it is
    the fully content-cleared form of x^order(L) * L expanded through
    x^j Dx^j = E(E-1)...(E-j+1).
    """
    return full_primitive(_euler_raw(L))


def from_euler(L: OrePoly) -> OrePoly:
    """Substitute E = x*Dx and expand back to the derivation basis."""
    if L.generator != GEN_EULER:
        raise ValueError("expected an Euler-generator operator")
    if L.is_zero():
        raise ValueError("cannot convert the zero operator")
    xdx = OrePoly((RatFun.zero(), RatFun(Poly.x())), GEN_DX)
    acc = OrePoly.zero(GEN_DX)
    power = OrePoly.from_scalar(1, GEN_DX)
    for j, c in enumerate(L.coeffs):
        if j:
            power = ore_mul(power, xdx)
        if not c.is_zero():
            acc = acc + power.scale(c)
    return normalize_primitive(acc)


def infinity_not_irregular(L: OrePoly) -> bool:
    """True iff deg p_j + (r - j) <= deg p_r for all j (so the point at
    infinity is ordinary or a regular singularity)."""
    if L.is_zero():
        raise ValueError("zero operator")
    if L.generator != GEN_DX:
        raise ValueError("expected a Dx-generator operator")
    prim = normalize_primitive(L)
    r = prim.order
    dr = prim.coeffs[-1].num.degree
    for j, c in enumerate(prim.coeffs):
        if c.num.degree + (r - j) > dr:
            return False
    return True


def shift_operator(L: OrePoly, c) -> OrePoly:
    """Operator M with M(g)(x) = L(f)(x + c) for g(x) = f(x + c)."""
    if L.generator != GEN_DX:
        raise ValueError("expected a Dx-generator operator")
    return OrePoly(tuple(cf.compose_shift(c) for cf in L.coeffs), GEN_DX)


class TruncSeries:
    """Truncated power series: coefficients c_0..c_N of x^0..x^N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(
            self, "coeffs",
            tuple(c if isinstance(c, Fraction) else Fraction(c)
                  for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def order(self) -> int:
        """Truncation order N (coefficients are exact through x^N)."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def truncate(self, n: int) -> TruncSeries:
        return TruncSeries(self.coeffs[:n + 1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    out = [Fraction(0)] * (n + 1)
    for i, ca in enumerate(a.coeffs[:n + 1]):
        if ca:
            for j, cb in enumerate(b.coeffs[:n + 1 - i]):
                out[i + j] += ca * cb
    return TruncSeries(out)


def series_solution(L: OrePoly, init, N: int) -> TruncSeries:
    """Unique truncated series solution of L with prescribed derivatives.

    init[j] is the j-th derivative at 0 for j < order(L), i.e. the series
    starts sum init[j]/j! x^j; 0 must be an ordinary point (the leading
    coefficient must not vanish there).
    """
    if L.generator != GEN_DX:
        raise ValueError("expected a Dx-generator operator")
    prim = full_primitive(L)
    if prim.is_zero():
        raise ValueError("zero operator")
    r = prim.order
    if len(init) != r:
        raise ValueError(f"expected {r} initial derivatives")
    polys = [c.num for c in prim.coeffs]
    if polys[-1].eval(0) == 0:
        raise ValueError("0 is a singular point; shift the operator first")
    c = [Fraction(0)] * (N + 1)
    for j in range(min(r, N + 1)):
        c[j] = Fraction(init[j]) / factorial(j)
    lead0 = polys[-1].coeff(0)
    for t in range(N + 1 - r):
        s = Fraction(0)
        for j, pj in enumerate(polys):
            for k, pk in enumerate(pj.coeffs):
                if pk == 0 or (j == r and k == 0):
                    continue
                m = t - k + j
                if 0 <= m <= t + r - 1:
                    s += pk * _falling(m, j) * c[m]
        c[t + r] = -s / (lead0 * _falling(t + r, r))
    return TruncSeries(c)


def series_apply(L: OrePoly, s: TruncSeries) -> TruncSeries:
    """Apply an operator to a truncated series; the result is exact through
    x^(N - order) when s is exact through x^N."""
    prim = full_primitive(L)
    if prim.is_zero():
        return TruncSeries([0] * (s.order + 1))
    r = prim.order
    if s.order < r:
        raise ValueError("series too short for the operator order")
    n_out = s.order - r
    out = [Fraction(0)] * (n_out + 1)
    d = list(s.coeffs)
    for j, cf in enumerate(prim.coeffs):
        if j:
            d = [i * d[i] for i in range(1, len(d))]
        pj = cf.num
        for k, pk in enumerate(pj.coeffs):
            if pk == 0:
                continue
            for i, di in enumerate(d):
                if i + k <= n_out:
                    out[i + k] += pk * di
    return TruncSeries(out)


def _falling(m: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= (m - i)
    return out
