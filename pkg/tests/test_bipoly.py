"""Bivariate polynomials: derivatives, resultants, square-freeness, gcd."""

import random

import pytest

from pseudolin.bipoly import (BiPoly, bipoly_coprime, bipoly_derivative,
                              bipoly_gcd, bipoly_pseudo_divmod, format_bipoly,
                              resultant_y, squarefree_y, ypoly_ext_gcd,
                              ypoly_gcd)
from pseudolin.poly import Poly
from pseudolin.ratfun import RatFun
from test_poly import rand_poly

x = Poly.x()
one = Poly.one()


def rand_bipoly(rng, dx=3, dy=3):
    cols = [rand_poly(rng, rng.randint(-1, dx)) for _ in range(dy + 1)]
    return BiPoly(cols)


def test_derivative_examples():
    p = BiPoly([x, Poly(), one])             # y^2 + x
    assert bipoly_derivative(p, "y") == BiPoly([Poly(), Poly([2])])
    assert bipoly_derivative(p, "x") == BiPoly([one])
    m = BiPoly([Poly(), Poly(), Poly(), x * x])   # x^2 y^3
    assert bipoly_derivative(m, "x") == BiPoly([Poly(), Poly(), Poly(),
                                                Poly([0, 2])])


def test_derivative_linearity_and_leibniz():
    rng = random.Random(20)
    for _ in range(60):
        a, b = rand_bipoly(rng, 2, 2), rand_bipoly(rng, 2, 2)
        for var in ("x", "y"):
            assert (a + b).deriv(var) == a.deriv(var) + b.deriv(var)
            assert (a * b).deriv(var) == \
                a.deriv(var) * b + a * b.deriv(var)


def test_resultant_examples():
    q = BiPoly([x, Poly(), one])              # y^2 + x
    assert resultant_y(q, BiPoly([Poly(), Poly([2])])) == Poly([0, 4])
    assert resultant_y(BiPoly([-one, one]), BiPoly([one, one])) == Poly([2])
    q2 = BiPoly([-x, Poly(), one])            # y^2 - x
    assert resultant_y(q2, BiPoly([Poly(), Poly([2])])) == Poly([0, -4])


def test_resultant_rejects_zero():
    with pytest.raises(ValueError):
        resultant_y(BiPoly(), BiPoly.one())


def test_resultant_detects_common_factor():
    rng = random.Random(21)
    for _ in range(40):
        a = rand_bipoly(rng, 2, 2)
        b = rand_bipoly(rng, 2, 2)
        if a.is_zero() or b.is_zero() or a.degree_y < 1 or b.degree_y < 1:
            continue
        g = ypoly_gcd(a.to_ypoly(), b.to_ypoly())
        res = resultant_y(a, b)
        assert res.is_zero() == (g.degree > 0)
        # and force a shared factor
        c = rand_bipoly(rng, 1, 1)
        if c.degree_y == 1:
            assert resultant_y(a * c, b * c).is_zero()


def test_squarefree_examples():
    assert squarefree_y(BiPoly([x, Poly(), one]))       # y^2 + x
    sq = BiPoly([one, Poly([-2]), one])                 # (y-1)^2
    assert not squarefree_y(sq)
    assert squarefree_y(BiPoly([-(x * x), Poly(), one]))  # y^2 - x^2


def test_ypoly_ext_gcd():
    rng = random.Random(22)
    for _ in range(40):
        a = rand_bipoly(rng, 2, 2).to_ypoly()
        b = rand_bipoly(rng, 2, 2).to_ypoly()
        if a.is_zero() or b.is_zero():
            continue
        g, s, t = ypoly_ext_gcd(a, b)
        assert s * a + t * b == g
        if not g.is_zero():
            assert g.lc == RatFun.one()


def test_pseudo_divmod():
    rng = random.Random(23)
    for _ in range(40):
        a, b = rand_bipoly(rng, 2, 3), rand_bipoly(rng, 2, 2)
        if b.is_zero() or b.degree_y < 1:
            continue
        Q, R, k = bipoly_pseudo_divmod(a, b)
        lc = b.lc_y
        lhs = a
        for _ in range(k):
            lhs = lhs * lc
        assert lhs == Q * b + R
        assert R.is_zero() or R.degree_y < b.degree_y


def test_bipoly_gcd_and_coprime():
    p = BiPoly([one])
    q = BiPoly([x, Poly(), one])
    assert bipoly_coprime(p, q)
    g = BiPoly([x, one])                      # y + x
    a = q * g
    b = BiPoly([one, one]) * g                # (y+1)(y+x)
    got = bipoly_gcd(a, b)
    assert got == g
    assert not bipoly_coprime(a, b)


def test_x_slice_and_format():
    q = BiPoly([Poly([0, -1]), one, Poly([0, 1])])   # x y^2 + y - x
    assert q.x_slice(1) == Poly([-1, 0, 1])          # y^2 - 1
    assert q.x_slice(0) == Poly([0, 1])              # y
    assert format_bipoly(BiPoly([x, Poly(), one])) == "y^2 + x"
