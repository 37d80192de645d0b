"""Exact linear algebra: determinants, solving, rank, phi_ell, builders."""

import random

import pytest

from pseudolin.linalg import (PolyMatrix, RatMatrix, companion,
                              det_denominator, det_fraction_free,
                              det_rational, invert, kronecker, rank,
                              solve_rational)
from pseudolin.poly import Poly, poly_divides, poly_gcd
from pseudolin.ratfun import RatFun
from test_poly import rand_poly
from test_ratfun import rand_ratfun

x = Poly.x()


def rand_ratmatrix(rng, n, m=None):
    m = n if m is None else m
    return RatMatrix(n, m, [rand_ratfun(rng) for _ in range(n * m)])


def test_det_examples():
    assert det_fraction_free(PolyMatrix.from_rows([[x, 0], [0, x - 1]])) \
        == x * x - x
    assert det_fraction_free(PolyMatrix.from_rows([[1, 2], [3, 4]])) \
        == Poly([-2])
    # 3x3 Sylvester matrix of (y^2 + x, 2y) matches the resultant oracle
    syl = PolyMatrix.from_rows([[1, 0, x], [2, 0, 0], [0, 2, 0]])
    assert det_fraction_free(syl) == Poly([0, 4])


def test_det_requires_square():
    with pytest.raises(ValueError):
        det_fraction_free(PolyMatrix.zeros(2, 3))


def _cofactor_poly(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = Poly()
    sign = 1
    for j in range(n):
        if not rows[0][j].is_zero():
            sub = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
            acc = acc + rows[0][j] * _cofactor_poly(sub) * sign
        sign = -sign
    return acc


def test_det_matches_cofactor_expansion():
    rng = random.Random(30)
    for _ in range(60):
        n = rng.randint(1, 4)
        rows = [[rand_poly(rng, 2) for _ in range(n)] for _ in range(n)]
        assert det_fraction_free(PolyMatrix.from_rows(rows)) \
            == _cofactor_poly(rows)


def test_solve_examples():
    A = RatMatrix(1, 1, [RatFun(1)])
    assert solve_rational(A, [RatFun(1, x)]) == [RatFun(1, x)]
    A = RatMatrix(2, 2, [RatFun(x), RatFun(0), RatFun(0), RatFun(1)])
    assert solve_rational(A, [RatFun(1), RatFun(1, x)]) \
        == [RatFun(1, x), RatFun(1, x)]
    A = RatMatrix(2, 2, [RatFun(1, x), RatFun(1), RatFun(0), RatFun(x)])
    assert solve_rational(A, [RatFun(0), RatFun(x * x)]) \
        == [RatFun(-(x * x)), RatFun(x)]


def test_solve_inconsistent_and_rank_deficient():
    # 2 equations, 1 unknown, incompatible
    A = RatMatrix(2, 1, [RatFun(1), RatFun(1)])
    assert solve_rational(A, [RatFun(0), RatFun(1)]) is None
    # rank-deficient columns
    A = RatMatrix(2, 2, [RatFun(1), RatFun(1), RatFun(1), RatFun(1)])
    with pytest.raises(ValueError):
        solve_rational(A, [RatFun(1), RatFun(1)])


def test_solve_random_consistency():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(1, 3)
        A = rand_ratmatrix(rng, n)
        if rank(A) < n:
            continue
        sol = [rand_ratfun(rng) for _ in range(n)]
        b = A.matvec(sol)
        assert solve_rational(A, b) == sol


def test_rank_examples():
    assert rank(RatMatrix.zeros(2, 3)) == 0
    assert rank(RatMatrix.identity(3)) == 3
    prop = RatMatrix(2, 2, [RatFun(1), RatFun(x), RatFun(x), RatFun(x * x)])
    assert rank(prop) == 1


def test_det_denominator_examples():
    R = RatMatrix(2, 2, [RatFun(1, x), RatFun(1, x - 1),
                         RatFun(1, x * x), RatFun(1, x)])
    expected = (x * x * (x - 1)).monic()
    assert det_denominator(R, 1) == expected
    assert det_denominator(R, 2) == expected
    poly_mat = RatMatrix(2, 2, [RatFun(rand_poly(random.Random(1), 2))
                                for _ in range(4)])
    assert det_denominator(poly_mat, 2) == Poly.one()
    assert det_denominator(R, 0) == Poly.one()


def test_det_denominator_laws():
    rng = random.Random(32)
    trials = 0
    while trials < 25:
        n = rng.randint(1, 2)
        R = rand_ratmatrix(rng, n)
        phis = [det_denominator(R, ell) for ell in range(n + 2)]
        for ell in range(n + 1):
            assert poly_divides(phis[ell], phis[ell + 1])
            assert poly_divides(phis[ell], phis[1] ** ell)
        r = rank(R)
        for ell in range(r, n + 2):
            assert phis[ell] == phis[r]
        trials += 1


def test_det_denominator_sum_product_laws():
    rng = random.Random(33)
    done = 0
    while done < 20:
        n = rng.randint(1, 2)
        R1, R2 = rand_ratmatrix(rng, n), rand_ratmatrix(rng, n)
        S, P = R1.add(R2), R1.matmul(R2)
        for ell in range(1, n + 1):
            bound = det_denominator(R1, ell) * det_denominator(R2, ell)
            assert poly_divides(det_denominator(S, ell), bound)
            assert poly_divides(det_denominator(P, ell), bound)
        if poly_gcd(det_denominator(R1, 1),
                    det_denominator(R2, 1)).degree == 0:
            for ell in range(1, n + 1):
                assert det_denominator(S, ell) == \
                    det_denominator(R1, ell) * det_denominator(R2, ell)
        done += 1


def test_det_denominator_inverse_law():
    rng = random.Random(34)
    done = 0
    while done < 15:
        n = rng.randint(2, 3)
        R = rand_ratmatrix(rng, n)
        det = det_rational(R)
        if det.is_zero():
            continue
        alpha, beta = det.num.monic(), det.den
        lhs = (beta * det_denominator(invert(R), n)).monic()
        rhs = (alpha * det_denominator(R, n)).monic()
        assert lhs == rhs
        done += 1


def test_kronecker_examples():
    I2 = PolyMatrix.identity(2)
    assert kronecker(I2, I2) == PolyMatrix.identity(4)
    B = PolyMatrix.from_rows([[x, 1], [0, x - 1]])
    a = PolyMatrix.from_rows([[x + 1]])
    assert kronecker(a, B) == PolyMatrix.from_rows(
        [[(x + 1) * x, x + 1], [Poly(), (x + 1) * (x - 1)]])
    swap = PolyMatrix.from_rows([[0, 1], [1, 0]])
    K = kronecker(swap, I2)
    assert K.entry(0, 2) == Poly.one() and K.entry(2, 0) == Poly.one()
    assert K.entry(0, 0).is_zero()


def test_companion_examples():
    C = companion([RatFun(-1)], RatFun(1))
    assert C == RatMatrix(1, 1, [RatFun(1)])
    C = companion([RatFun(0), RatFun(-1)], RatFun(1))
    assert C == RatMatrix.from_rows([[0, 0], [1, 1]])
    C = companion([RatFun(2), RatFun(-2 * x)], RatFun(x * x))
    assert C.entry(0, 1) == RatFun(-2, x * x)
    assert C.entry(1, 1) == RatFun(2, x)
    assert C.entry(1, 0) == RatFun(1)
    with pytest.raises(ValueError):
        companion([RatFun(1)], RatFun(0))


def test_invert_roundtrip():
    rng = random.Random(35)
    done = 0
    while done < 10:
        n = rng.randint(1, 3)
        R = rand_ratmatrix(rng, n)
        if det_rational(R).is_zero():
            continue
        assert R.matmul(invert(R)) == RatMatrix.identity(n)
        done += 1
