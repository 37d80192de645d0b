"""Seeded instance generation: constraints, determinism, retry cap."""

import random

import pytest

from pseudolin.bipoly import bipoly_coprime, squarefree_y
from pseudolin.instances.hermite import genericity_check
from pseudolin.ore import infinity_not_irregular
from pseudolin.randgen import (GenerationError, _retrying, random_instance,
                               rand_strictly_proper_map)
from pseudolin.relations import is_strictly_proper


def test_hermite_instance_constraints():
    p, q = random_instance("hermite", {"dx": 2, "dy": 2, "generic": True},
                           seed=5)
    assert q.degree_x == 2 and q.degree_y == 2
    assert p.degree_y < 2 and p.degree_x <= 2
    assert squarefree_y(q) and bipoly_coprime(p, q)
    assert genericity_check(q)


def test_operator_pair_constraints():
    ops = random_instance("lclm", {"order": 2, "degree": 2, "count": 2,
                                   "regular_infinity": True}, seed=5)
    assert len(ops) == 2
    for op in ops:
        assert op.order == 2
        assert infinity_not_irregular(op)


def test_determinism():
    a = random_instance("algebraic", {"dx": 2, "dy": 2}, seed=42)
    b = random_instance("algebraic", {"dx": 2, "dy": 2}, seed=42)
    assert a == b
    c = random_instance("algebraic", {"dx": 2, "dy": 2}, seed=43)
    assert a != c


def test_strictly_proper_generator():
    rng = random.Random(3)
    for _ in range(10):
        pmap = rand_strictly_proper_map(rng, 2, 2)
        assert is_strictly_proper(pmap.T)


def test_retry_cap_raises():
    with pytest.raises(GenerationError):
        _retrying(lambda: 0, lambda _: False, "an impossible draw")
    with pytest.raises(ValueError):
        random_instance("unknown-kind", {}, seed=0)
