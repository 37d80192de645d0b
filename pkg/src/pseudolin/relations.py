"""Pseudo-linear maps theta = d/dx + T and their minimal relations.

Given a square rational matrix T and a polynomial vector a, the solver
finds the shortest linear relation with polynomial coefficients among the
iterates a, theta(a), theta^2(a), ...  where theta(v) = v' + T v.

The implementation never forms the rational iterates directly.  With den a
common denominator of T and N = den*T, the iterates satisfy

    theta^i(a) = b_i / den^i,
    b_{i+1}    = den*b_i' - i*den'*b_i + N*b_i,

so the b_i stay polynomial vectors (integer-cleared).  Rank growth is
watched by incremental fraction-free elimination on the columns b_i, with
coordinate slots appended so the first dependent column yields the
relation certificate directly.  Reduced vectors are normalized by
stripping integer content, full powers of den, and the polynomial content;
for the structured instances in this package the stripped entries stay
small (their denominators are powers of the realisation determinant).

Degree-bound predictors: ``bound_realisation`` (for a strictly proper T
with a realisation T = W + X M^-1 Y, in terms of deg det M) and
``bound_direct`` (Cramer-style, in terms of the degree of den and den*T).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from pseudolin import _kernel as zk
from pseudolin.linalg import (GaussTracker, PolyMatrix, RatMatrix,
                              det_denominator, det_fraction_free,
                              solve_rational)
from pseudolin.poly import NEG_INF, Poly, poly_divides, poly_lcm
from pseudolin.ratfun import RatFun, common_denominator


class PseudoLinearMap:
    """theta = d/dx + T for a square T over Q(x)."""

    __slots__ = ("T",)

    def __init__(self, T: RatMatrix):
        if T.rows != T.cols:
            raise ValueError("T must be square")
        object.__setattr__(self, "T", T)

    def __setattr__(self, name, value):
        raise AttributeError("PseudoLinearMap is immutable")

    @property
    def n(self) -> int:
        return self.T.rows

    def theta(self, v):
        return theta_apply(self, v)


def theta_apply(pmap: PseudoLinearMap, v):
    """theta(v) = v' + T v, componentwise exact."""
    if len(v) != pmap.n:
        raise ValueError("vector dimension mismatch")
    v = [c if isinstance(c, RatFun) else RatFun(c) for c in v]
    Tv = pmap.T.matvec(v)
    return [c.derivative() + w for c, w in zip(v, Tv)]


def theta_iterates(pmap: PseudoLinearMap, a, count: int):
    """[a, theta a, ..., theta^(count-1) a] as RatFun vectors."""
    vecs = [[RatFun(c) for c in a]]
    for _ in range(count - 1):
        vecs.append(theta_apply(pmap, vecs[-1]))
    return vecs


@dataclass(frozen=True)
class Relation:
    """Minimal relation eta_rho * theta^rho a + ... + eta_0 * a = 0.

    Normalized so the eta_i are jointly integer-primitive with no common
    polynomial factor and the leading rational of eta_rho is positive.
    """

    rho: int
    eta: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.eta) != self.rho + 1:
            raise ValueError("relation length mismatch")
        if self.eta[-1].is_zero():
            raise ValueError("leading relation coefficient is zero")

    def degrees(self):
        return [e.degree for e in self.eta]

    @property
    def degree(self):
        return max(self.degrees())


@dataclass(frozen=True)
class Realisation:
    """Quadruple (W, X, M, Y) with T = W + X M^-1 Y and Delta = det M."""

    W: PolyMatrix
    X: PolyMatrix
    M: PolyMatrix
    Y: PolyMatrix
    delta: Poly = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        n, m = self.X.rows, self.X.cols
        if self.W.rows != n or self.W.cols != n:
            raise ValueError("W must be n x n")
        if self.M.rows != m or self.M.cols != m:
            raise ValueError("M must be m x m")
        if self.Y.rows != m or self.Y.cols != n:
            raise ValueError("Y must be m x n")
        if self.delta is None:
            object.__setattr__(self, "delta", det_fraction_free(self.M))
        if self.delta.is_zero():
            raise ValueError("singular M in realisation")

    @property
    def delta_degree(self) -> int:
        return self.delta.degree

    def reconstruct(self) -> RatMatrix:
        """W + X M^-1 Y, for validating a realisation against its map."""
        n, m = self.X.rows, self.M.rows
        Mrat = self.M.to_rat()
        cols = []
        for j in range(n):
            rhs = [RatFun(self.Y.entry(i, j)) for i in range(m)]
            sol = solve_rational(Mrat, rhs)
            if sol is None:
                raise ValueError("inconsistent realisation solve")
            cols.append(sol)
        entries = []
        for i in range(n):
            for j in range(n):
                acc = RatFun(self.W.entry(i, j))
                for k in range(m):
                    acc = acc + RatFun(self.X.entry(i, k)) * cols[j][k]
                entries.append(acc)
        return RatMatrix(n, n, entries)


def is_strictly_proper(T: RatMatrix) -> bool:
    """True iff every entry has numerator degree < denominator degree."""
    return T.is_strictly_proper()


def trivial_realisation(pmap: PseudoLinearMap) -> Realisation:
    """T = (den*T)(den*I)^(-1) for den the monic lcm of the denominators."""
    n = pmap.n
    den = common_denominator(pmap.T.entries)
    X = PolyMatrix(n, n, [(e * den).num for e in pmap.T.entries])
    W = PolyMatrix.zeros(n, n)
    M = PolyMatrix(n, n, [den if i == j else Poly()
                          for i in range(n) for j in range(n)])
    Y = PolyMatrix.identity(n)
    return Realisation(W, X, M, Y, delta=den**n)


# -- degree-bound predictors ---------------------------------------------------


def bound_realisation(rho: int, d_a: int, delta: int, i: int) -> int:
    """Bound on deg eta_i for strictly proper T with deg det M = delta."""
    if not 0 <= i <= rho:
        raise ValueError("index out of range")
    return rho * d_a + rho * delta - (rho * (rho + 1) // 2 - i)


def bound_direct(rho: int, d_a: int, d: int, D: int, i: int):
    """Cramer-style shape bound: eta_i = den^i * p_i.

    Returns (i, bound on deg p_i) with Dt = max(d - 1, D), where d is the
    degree of den and D the degree of den*T.
    """
    if not 0 <= i <= rho:
        raise ValueError("index out of range")
    Dt = max(d - 1, D)
    return i, rho * d_a + (rho * (rho + 1) // 2 - i) * Dt


# -- iterate clearing and elimination ---------------------------------------------


def _gcd2(a, b):
    from math import gcd
    return gcd(a, b)


def _clear_map(pmap: PseudoLinearMap):
    """Integer-cleared (den, N = den*T) pair driving the b_i recurrence."""
    den_q = common_denominator(pmap.T.entries)
    N_q = [[(pmap.T.entry(i, j) * den_q).num for j in range(pmap.n)]
           for i in range(pmap.n)]
    scale = 1
    for c in den_q.coeffs:
        scale = lcm(scale, c.denominator)
    for row in N_q:
        for p in row:
            for c in p.coeffs:
                scale = lcm(scale, c.denominator)
    den_z = [int(c * scale) for c in den_q.coeffs]
    N_z = [[[int(c * scale) for c in p.coeffs] for p in row] for row in N_q]
    return den_z, N_z


def _iterate_step(den_z, denp_z, N_z, b, i):
    """b_{i+1} = den*b' - i*den'*b + N*b on integer polynomial vectors."""
    out = []
    for j in range(len(b)):
        t = zk.zp_mul(den_z, zk.zp_deriv(b[j]))
        if i:
            t = zk.zp_sub(t, zk.zp_scale(zk.zp_mul(denp_z, b[j]), i))
        for k in range(len(b)):
            if N_z[j][k] and b[k]:
                t = zk.zp_addmul(t, N_z[j][k], b[k])
        out.append(t)
    return out


def solve_min_relation(pmap: PseudoLinearMap, a) -> Relation:
    """Minimal relation among the theta-iterates of a polynomial vector a.

    Iterates are appended one at a time; the first column that becomes
    dependent fixes rho, and its elimination certificate gives the
    relation, which is then cleared to the canonical primitive form.
    """
    n = pmap.n
    a = [c if isinstance(c, Poly) else Poly.const(c) for c in a]
    if len(a) != n:
        raise ValueError("vector dimension mismatch")
    if all(c.is_zero() for c in a):
        raise ValueError("zero initial vector has no minimal relation")
    den_z, N_z = _clear_map(pmap)
    denp_z = zk.zp_deriv(den_z)
    den_zp, _ = zk.zp_primitive(den_z)

    sa = 1
    for c in a:
        for f in c.coeffs:
            sa = lcm(sa, f.denominator)
    b = [[int(f * sa) for f in c.coeffs] for c in a]

    tracker = GaussTracker(n, den_zp)
    ncoord = n + 1
    i = 0
    while True:
        aug = [list(z) for z in b] + [[] for _ in range(ncoord)]
        aug[n + i] = [1]
        coords = tracker.offer(aug)
        if coords is not None:
            rho = i
            break
        if i >= n:
            raise AssertionError("no dependence found within n+1 iterates")
        b = _iterate_step(den_z, denp_z, N_z, b, i)
        i += 1

    # coords certify sum_j coords[j] * b_j = 0 with b_j = s_j den^j theta^j a,
    # so nu_i = theta-coordinates of theta^rho a in the earlier iterates.
    den_full = Poly.from_z(den_z)  # scale * den_q, the per-step clearing
    c_rho = Poly.from_z(coords[rho])
    nu = []
    denpow = Poly.one()
    for i in range(rho - 1, -1, -1):
        denpow = denpow * den_full
        nu.append(RatFun(Poly.from_z(coords[i]), c_rho * denpow))
    nu.reverse()

    ell = Poly.one()
    for v in nu:
        ell = poly_lcm(ell, v.den)
    eta = [v.num * ell.exact_div(v.den) for v in nu] + [ell]

    d = 1
    for p in eta:
        for f in p.coeffs:
            d = lcm(d, f.denominator)
    g = 0
    for p in eta:
        for f in p.coeffs:
            g = _gcd2(g, int(f * d))
    scale = Fraction(d, g)
    if eta[-1].lc * scale < 0:
        scale = -scale
    return Relation(rho, tuple(p * scale for p in eta))


def verify_relation(pmap: PseudoLinearMap, a, rel: Relation) -> bool:
    """Recompute sum eta_i theta^i a with plain rational arithmetic."""
    a = [c if isinstance(c, Poly) else Poly.const(c) for c in a]
    vecs = theta_iterates(pmap, a, rel.rho + 1)
    for j in range(pmap.n):
        acc = RatFun.zero()
        for i, e in enumerate(rel.eta):
            if not e.is_zero():
                acc = acc + vecs[i][j] * e
        if not acc.is_zero():
            return False
    return True


# -- Krylov determinantal-denominator property -----------------------------------


def krylov_matrix(pmap: PseudoLinearMap, a, s_list) -> RatMatrix:
    """K = [theta^{s_1} a | ... | theta^{s_r} a] for nondecreasing s."""
    if any(s2 < s1 for s1, s2 in zip(s_list, s_list[1:])):
        raise ValueError("exponent list must be nondecreasing")
    if s_list and s_list[0] < 0:
        raise ValueError("exponents must be nonnegative")
    vecs = theta_iterates(pmap, a, (max(s_list) if s_list else 0) + 1)
    cols = [vecs[s] for s in s_list]
    return RatMatrix(pmap.n, len(cols),
                     [cols[j][i] for i in range(pmap.n)
                      for j in range(len(cols))])


def krylov_denominator_check(pmap: PseudoLinearMap, real: Realisation, a,
                             s_list, ell_max: int,
                             allow_improper: bool = False) -> bool:
    """Check phi_ell(K) divides Delta^{s_r} for all ell <= ell_max.

    Requires T strictly proper (the hypothesis under which the property is
    proved); pass allow_improper=True to probe the conjectural general
    case without the properness gate.
    """
    if not allow_improper and not is_strictly_proper(pmap.T):
        raise ValueError("T is not strictly proper "
                         "(use allow_improper=True to probe anyway)")
    K = krylov_matrix(pmap, a, s_list)
    target = real.delta ** (s_list[-1] if s_list else 0)
    for ell in range(ell_max + 1):
        phi = det_denominator(K, ell)
        if not poly_divides(phi, target):
            return False
    return True


# -- bound reporting -------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """Observed degrees of a relation against a per-index bound."""

    instance: str
    bound_name: str
    rho: int
    observed: tuple        # degree of eta_i, None for eta_i = 0
    bounds: tuple          # predicted bound per i
    slack: tuple           # bound - observed, None for eta_i = 0
    asserted: bool         # whether the bound hypotheses hold
    global_bound: int | None = None

    def holds(self) -> bool:
        """True when every observed degree is within its bound."""
        return all(obs is None or obs <= bnd
                   for obs, bnd in zip(self.observed, self.bounds))


def realisation_bound_report(instance: str, rel: Relation, d_a: int,
                             delta_deg: int, asserted: bool,
                             bound_name: str = "realisation",
                             global_bound: int | None = None) -> BoundReport:
    """Per-index degree report against the realisation bound."""
    observed = []
    bounds = []
    slack = []
    for i, e in enumerate(rel.eta):
        bnd = bound_realisation(rel.rho, d_a, delta_deg, i)
        obs = None if e.is_zero() else e.degree
        observed.append(obs)
        bounds.append(bnd)
        slack.append(None if obs is None else bnd - obs)
    return BoundReport(instance, bound_name, rel.rho, tuple(observed),
                       tuple(bounds), tuple(slack), asserted, global_bound)


def vector_degree(a) -> int:
    """deg of a polynomial vector: max entry degree (NEG_INF if zero)."""
    degs = [c.degree for c in a]
    return max(degs) if degs else NEG_INF
