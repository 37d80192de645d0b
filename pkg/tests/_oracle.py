"""Brute-force reference implementations used to cross-check the solver.

Everything here goes out of its way to be independent of the production
code paths: iterates via plain rational arithmetic, each column scaled by
the common denominator of its entries (so minors live in Q[x]), ranks via
exhaustive minor enumeration with recursive cofactor determinants, and the
relation via Cramer's rule on an explicitly located nonsingular square
subsystem.  No elimination, no integer kernels.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from pseudolin.poly import Poly, poly_lcm
from pseudolin.ratfun import RatFun, common_denominator
from pseudolin.relations import Relation, theta_apply


def cofactor_det(rows):
    """Recursive cofactor expansion along the first row (Poly entries)."""
    n = len(rows)
    if n == 0:
        return Poly.one()
    if n == 1:
        return rows[0][0]
    acc = Poly()
    sign = 1
    for j in range(n):
        if not rows[0][j].is_zero():
            minor = [[row[k] for k in range(n) if k != j]
                     for row in rows[1:]]
            acc = acc + rows[0][j] * cofactor_det(minor) * sign
        sign = -sign
    return acc


def brute_rank(cols):
    """Largest k with some nonzero k x k minor."""
    if not cols:
        return 0
    nrows = len(cols[0])
    ncols = len(cols)
    for k in range(min(nrows, ncols), 0, -1):
        for rsel in combinations(range(nrows), k):
            for csel in combinations(range(ncols), k):
                sub = [[cols[j][i] for j in csel] for i in rsel]
                if not cofactor_det(sub).is_zero():
                    return k
    return 0


def oracle_min_relation(pmap, a) -> Relation:
    """Relation from dense nullspace computation via Cramer's rule."""
    n = pmap.n
    vecs = [[RatFun(c) for c in a]]
    cols = []       # denominator-cleared columns (Poly entries)
    dens = []       # the monic clearing denominators
    rho = None

    def clear(vec):
        d = common_denominator(vec)
        return [(e * d).num for e in vec], d

    c0, d0 = clear(vecs[0])
    cols.append(c0)
    dens.append(d0)
    for m in range(1, n + 2):
        vecs.append(theta_apply(pmap, vecs[-1]))
        cm, dm = clear(vecs[-1])
        cols.append(cm)
        dens.append(dm)
        if brute_rank(cols) == m:
            rho = m
            break
    assert rho is not None, "no dependence within n+1 iterates"
    # nonsingular rho x rho row selection of the first rho cleared columns
    square = None
    for rsel in combinations(range(n), rho):
        sub = [[cols[j][i] for j in range(rho)] for i in rsel]
        d = cofactor_det(sub)
        if not d.is_zero():
            square = (rsel, sub, d)
            break
    assert square is not None
    rsel, sub, det = square
    rhs = [-cols[rho][i] for i in rsel]
    # Cramer on the cleared system: sum_j w_j C_j = -C_rho, then
    # nu_j = w_j d_j / d_rho recovers theta^rho a = sum nu_j theta^j a.
    nu = []
    for j in range(rho):
        replaced = [[rhs[i] if k == j else sub[i][k] for k in range(rho)]
                    for i in range(rho)]
        w = RatFun(cofactor_det(replaced), det)
        nu.append(w * dens[j] / dens[rho])
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
            g = gcd(g, int(f * d))
    scale = Fraction(d, g)
    if eta[-1].lc * scale < 0:
        scale = -scale
    return Relation(rho, tuple(p * scale for p in eta))
