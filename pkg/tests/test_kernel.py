"""Backend parity and algebraic sanity of the integer-polynomial kernels."""

import random

import pytest

from pseudolin._kernel import _zkernel_py

try:
    from pseudolin._kernel import _zkernel
    BACKENDS = [_zkernel_py, _zkernel]
except ImportError:
    BACKENDS = [_zkernel_py]


def rand_zp(rng, max_deg=8, bound=20):
    deg = rng.randint(-1, max_deg)
    if deg < 0:
        return []
    c = [rng.randint(-bound, bound) for _ in range(deg + 1)]
    c[-1] = rng.randint(1, bound) * rng.choice((-1, 1))
    return c


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND)
def test_ring_identities(mod):
    rng = random.Random(101)
    for _ in range(200):
        a, b, c = (rand_zp(rng) for _ in range(3))
        assert mod.zp_add(a, b) == mod.zp_add(b, a)
        assert mod.zp_mul(a, b) == mod.zp_mul(b, a)
        left = mod.zp_mul(a, mod.zp_add(b, c))
        right = mod.zp_add(mod.zp_mul(a, b), mod.zp_mul(a, c))
        assert left == right
        assert mod.zp_sub(mod.zp_add(a, b), b) == a
        assert mod.zp_addmul(c, a, b) == mod.zp_add(c, mod.zp_mul(a, b))


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND)
def test_divexact_and_gcd(mod):
    rng = random.Random(202)
    for _ in range(150):
        a, b = rand_zp(rng), rand_zp(rng)
        if b:
            prod = mod.zp_mul(a, b)
            assert mod.zp_divexact(prod, b) == a
        g = mod.zp_gcd(a, b)
        if a or b:
            assert g and g[-1] > 0
            gg, cont = mod.zp_primitive(g)
            assert cont == 1 and gg == g
            if a:
                assert not any(_qrem(mod, a, g))
            if b:
                assert not any(_qrem(mod, b, g))
        else:
            assert g == []


def _qrem(mod, a, b):
    """Remainder of a by b over Q (pseudorem is a scalar multiple of it)."""
    return mod.zp_pseudorem(a, b)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND)
def test_divexact_rejects_inexact(mod):
    with pytest.raises(ValueError):
        mod.zp_divexact([1, 1], [2])   # (x+1)/2 not integral
    with pytest.raises(ValueError):
        mod.zp_divexact([1, 0, 1], [1, 1])
    with pytest.raises(ZeroDivisionError):
        mod.zp_divexact([1], [])


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.BACKEND)
def test_gcd_common_factor(mod):
    rng = random.Random(303)
    for _ in range(60):
        g = rand_zp(rng, 4)
        if not g:
            continue
        a, b = rand_zp(rng, 4), rand_zp(rng, 4)
        ag, bg = mod.zp_mul(a, g), mod.zp_mul(b, g)
        got = mod.zp_gcd(ag, bg)
        if ag or bg:
            gp, _ = mod.zp_primitive(g)
            if gp and gp[-1] < 0:
                gp = [-c for c in gp]
            # gcd(ag, bg) is a multiple of the primitive part of g
            assert not any(mod.zp_pseudorem(got, gp)) or got == []


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend not built")
def test_backends_agree():
    py, cy = BACKENDS
    rng = random.Random(404)
    for _ in range(300):
        a, b = rand_zp(rng, 10, 50), rand_zp(rng, 10, 50)
        assert py.zp_add(a, b) == cy.zp_add(a, b)
        assert py.zp_sub(a, b) == cy.zp_sub(a, b)
        assert py.zp_mul(a, b) == cy.zp_mul(a, b)
        assert py.zp_deriv(a) == cy.zp_deriv(a)
        assert py.zp_content(a) == cy.zp_content(a)
        assert py.zp_gcd(a, b) == cy.zp_gcd(a, b)
        if b:
            assert py.zp_pseudorem(a, b) == cy.zp_pseudorem(a, b)
            prod = py.zp_mul(a, b)
            assert py.zp_divexact(prod, b) == cy.zp_divexact(prod, b)
