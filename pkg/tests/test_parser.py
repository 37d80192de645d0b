"""Expression grammar, semantic checks, printing round trips."""

import random

import pytest

from pseudolin.bipoly import BiPoly
from pseudolin.exprparse import (ParseError, SemanticError, format_operator,
                                 format_ratfun2, parse)
from pseudolin.ore import OrePoly, normalize_primitive
from pseudolin.poly import Poly
from pseudolin.randgen import rand_operator
from pseudolin.ratfun import RatFun

x = Poly.x()
one = Poly.one()


def test_parse_ratfun2_example():
    p, q = parse("1/(y^2 + x)", "ratfun2")
    assert p == BiPoly([one])
    assert q == BiPoly([x, Poly(), one])


def test_parse_operator_examples():
    op = parse("x*Dx - 1", "operator")
    assert op == OrePoly([-1, RatFun(x)])
    op2 = parse("Dx^2 - 1", "operator")
    assert op2 == OrePoly([-1, 0, 1])


def test_parse_reduces_fractions():
    p, q = parse("(y^2 - 1)/(y - 1)", "ratfun2")
    assert p == BiPoly([one, one]) and q == BiPoly([one])
    b = parse("(x^2 - 1)/(x + 1)", "bipoly")
    assert b == BiPoly([x - 1])


def test_parse_bipoly_rejects_fraction():
    with pytest.raises(SemanticError):
        parse("1/(y + x)", "bipoly")


def test_syntax_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse("1 + ", "operator")
    assert "position 4" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse("(x + 1", "operator")
    assert e.value.pos == 6
    with pytest.raises(ParseError):
        parse("x $ y", "ratfun2")
    with pytest.raises(ParseError):
        parse("x^y", "operator")
    with pytest.raises(ParseError):
        parse("z + 1", "operator")


def test_semantic_errors():
    with pytest.raises(SemanticError):
        parse("y + 1", "operator")
    with pytest.raises(SemanticError):
        parse("Dx + y", "ratfun2")
    with pytest.raises(SemanticError):
        parse("1/Dx", "operator")
    with pytest.raises(SemanticError):
        parse("Dx/x", "operator")     # 1/x is not polynomial
    with pytest.raises(SemanticError):
        parse("1/0", "ratfun2")


def test_operator_division_by_cancelling_factor():
    from fractions import Fraction
    assert parse("(x*Dx)/x", "operator") == OrePoly([0, 1])
    assert parse("Dx/2", "operator") == OrePoly([0, Fraction(1, 2)])


def test_unary_minus():
    assert parse("-x*Dx + 2", "operator") == OrePoly([2, RatFun(-x)])
    assert parse("-1", "operator") == OrePoly([-1])


def test_noncommutative_products():
    assert parse("Dx*x", "operator") == OrePoly([1, RatFun(x)])
    assert parse("x*Dx", "operator") == OrePoly([0, RatFun(x)])


def test_format_operator_examples():
    assert format_operator(OrePoly([1, RatFun(2 * x)])) == "2*x*Dx + 1"
    assert format_operator(
        OrePoly([2, RatFun(-2 * x), RatFun(x * x)])) \
        == "x^2*Dx^2 - 2*x*Dx + 2"
    assert format_operator(OrePoly([0, 1])) == "Dx"
    assert format_operator(OrePoly.zero()) == "0"


def test_operator_round_trip():
    rng = random.Random(90)
    for _ in range(30):
        L = normalize_primitive(rand_operator(rng, 3, 3))
        text = format_operator(L)
        assert parse(text, "operator") == L


def test_ratfun2_round_trip():
    text = format_ratfun2(BiPoly([one]), BiPoly([x, Poly(), one]))
    p, q = parse(text, "ratfun2")
    assert p == BiPoly([one]) and q == BiPoly([x, Poly(), one])
