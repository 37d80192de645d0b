"""Expression parsing and printing for the command-line front end.

Grammar (whitespace insignificant, a leading minus is allowed):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' nat)?
    base   := nat | 'x' | 'y' | 'Dx' | '(' expr ')'

The same grammar feeds three targets: ``operator`` values normalize to
sum p_i(x)*Dx^i with polynomial p_i, ``ratfun2`` values to a reduced pair
of bivariate polynomials, and ``bipoly`` to a single bivariate polynomial.
Syntax errors carry the offending position; using y in an operator or Dx
in a rational expression is a semantic error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from pseudolin.bipoly import BiPoly, _normalize_bipoly, bipoly_gcd, format_bipoly
from pseudolin.ore import GEN_DX, OrePoly, ore_mul
from pseudolin.poly import Poly
from pseudolin.ratfun import RatFun


class ParseError(ValueError):
    """Syntax error with a 0-based input position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"syntax error at position {pos}: {message}")
        self.pos = pos


class SemanticError(ValueError):
    """Well-formed input that is invalid for the requested kind."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"semantic error at position {pos}: {message}")
        self.pos = pos


@dataclass(frozen=True)
class Token:
    kind: str  # 'nat' | 'name' | 'op' | 'end'
    text: str
    pos: int


def _tokenize(text: str):
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("nat", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            out.append(Token("name", text[i:j], i))
            i = j
            continue
        if c in "+-*/^()":
            out.append(Token("op", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    out.append(Token("end", "", n))
    return out


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int


@dataclass(frozen=True)
class Bin:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int


Expr = (Num, Var, Neg, Bin, Pow)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expr(self):
        tok = self.peek()
        node = None
        if tok.kind == "op" and tok.text == "-":
            self.take()
            node = Neg(self.term(), tok.pos)
        else:
            node = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                node = Bin(tok.text, node, self.term(), tok.pos)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.take()
                node = Bin(tok.text, node, self.factor(), tok.pos)
            else:
                return node

    def factor(self):
        node = self.base()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            etok = self.take()
            if etok.kind != "nat":
                raise ParseError("exponent must be a natural number",
                                 etok.pos)
            node = Pow(node, int(etok.text), tok.pos)
        return node

    def base(self):
        tok = self.take()
        if tok.kind == "nat":
            return Num(int(tok.text), tok.pos)
        if tok.kind == "name":
            if tok.text in ("x", "y", "Dx"):
                return Var(tok.text, tok.pos)
            raise ParseError(f"unknown symbol {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            closing = self.take()
            if closing.kind != "op" or closing.text != ")":
                raise ParseError("expected ')'", closing.pos)
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}",
                         tok.pos)


def parse_text(text: str):
    """Parse to the abstract syntax tree (no semantic checks)."""
    p = _Parser(_tokenize(text))
    node = p.expr()
    tail = p.peek()
    if tail.kind != "end":
        raise ParseError(f"unexpected {tail.text!r}", tail.pos)
    return node


# -- evaluation --------------------------------------------------------------


def _eval_operator(node) -> OrePoly:
    if isinstance(node, Num):
        return OrePoly.from_scalar(node.value, GEN_DX)
    if isinstance(node, Var):
        if node.name == "x":
            return OrePoly.from_scalar(RatFun(Poly.x()), GEN_DX)
        if node.name == "Dx":
            return OrePoly.gen(GEN_DX)
        raise SemanticError("y is not allowed in an operator", node.pos)
    if isinstance(node, Neg):
        return -_eval_operator(node.operand)
    if isinstance(node, Pow):
        base = _eval_operator(node.base)
        out = OrePoly.from_scalar(1, GEN_DX)
        for _ in range(node.exp):
            out = ore_mul(out, base)
        return out
    if isinstance(node, Bin):
        lhs = _eval_operator(node.left)
        rhs = _eval_operator(node.right)
        if node.op == "+":
            return lhs + rhs
        if node.op == "-":
            return lhs - rhs
        if node.op == "*":
            return ore_mul(lhs, rhs)
        if rhs.is_zero():
            raise SemanticError("division by zero", node.pos)
        if rhs.order > 0:
            raise SemanticError("Dx cannot appear in a denominator",
                                node.pos)
        return lhs.scale(RatFun.one() / rhs.coeff(0))
    raise TypeError(f"unknown node {node!r}")


def _eval_birat(node):
    """Evaluate to an unreduced pair (numerator, denominator) of BiPoly."""
    if isinstance(node, Num):
        return BiPoly([Poly.const(node.value)]), BiPoly.one()
    if isinstance(node, Var):
        if node.name == "x":
            return BiPoly([Poly.x()]), BiPoly.one()
        if node.name == "y":
            return BiPoly.y(), BiPoly.one()
        raise SemanticError("Dx is not allowed in a rational expression",
                            node.pos)
    if isinstance(node, Neg):
        n, d = _eval_birat(node.operand)
        return -n, d
    if isinstance(node, Pow):
        n, d = _eval_birat(node.base)
        nn, dd = BiPoly.one(), BiPoly.one()
        for _ in range(node.exp):
            nn, dd = nn * n, dd * d
        return nn, dd
    if isinstance(node, Bin):
        n1, d1 = _eval_birat(node.left)
        n2, d2 = _eval_birat(node.right)
        if node.op == "+":
            return n1 * d2 + n2 * d1, d1 * d2
        if node.op == "-":
            return n1 * d2 - n2 * d1, d1 * d2
        if node.op == "*":
            return n1 * n2, d1 * d2
        if n2.is_zero():
            raise SemanticError("division by zero", node.pos)
        return n1 * d2, d1 * n2
    raise TypeError(f"unknown node {node!r}")


def _bipoly_exact_div(a: BiPoly, g: BiPoly) -> BiPoly:
    q = a.to_ypoly().exact_div(g.to_ypoly())
    num, den = q.to_bipoly()
    if den != Poly.one():
        raise ValueError("inexact bivariate division")
    return num


def _reduce_pair(num: BiPoly, den: BiPoly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return BiPoly.zero(), BiPoly.one()
    g = bipoly_gcd(num, den)
    if g != BiPoly.one():
        num = _bipoly_exact_div(num, g)
        den = _bipoly_exact_div(den, g)
    dnorm = _normalize_bipoly(den)
    scale = None
    for j, c in enumerate(den.ycoeffs):
        for i, f in enumerate(c.coeffs):
            if f != 0:
                scale = dnorm.ycoeff(j).coeff(i) / f
                break
        if scale is not None:
            break
    return num * scale, dnorm


def parse(text: str, kind: str):
    """Parse text as an ``operator`` (OrePoly), a ``ratfun2`` (reduced pair
    of BiPoly) or a ``bipoly``."""
    node = parse_text(text)
    if kind == "operator":
        op = _eval_operator(node)
        for c in op.coeffs:
            if not c.is_poly():
                raise SemanticError(
                    "operator coefficients must be polynomial in x", 0)
        return op
    if kind in ("ratfun2", "bipoly"):
        num, den = _reduce_pair(*_eval_birat(node))
        if kind == "ratfun2":
            return num, den
        if den.degree_y > 0 or den.ycoeff(0).degree > 0:
            raise SemanticError("expected a polynomial, found a fraction", 0)
        return num * (Fraction(1) / den.ycoeff(0).coeff(0))
    raise ValueError(f"unknown parse kind {kind!r}")


# -- printing -----------------------------------------------------------------


def format_operator(L: OrePoly) -> str:
    """Expanded form with descending Dx powers: ``x^2*Dx^2 - 2*x*Dx + 2``.

    Requires polynomial coefficients (normalize first); round-trips through
    ``parse(..., "operator")``.
    """
    if L.generator != GEN_DX:
        raise ValueError("can only format Dx-generator operators")
    if L.is_zero():
        return "0"
    parts = []
    for j in range(len(L.coeffs) - 1, -1, -1):
        c = L.coeffs[j]
        if c.is_zero():
            continue
        if not c.is_poly():
            raise ValueError("operator has non-polynomial coefficients")
        p = c.num
        for i in range(len(p.coeffs) - 1, -1, -1):
            f = p.coeffs[i]
            if f == 0:
                continue
            mag = abs(f)
            factors = []
            if mag != 1 or (i == 0 and j == 0):
                factors.append(str(mag))
            if i >= 1:
                factors.append("x" if i == 1 else f"x^{i}")
            if j >= 1:
                factors.append("Dx" if j == 1 else f"Dx^{j}")
            term = "*".join(factors)
            if not parts:
                parts.append(term if f > 0 else "-" + term)
            else:
                parts.append((" + " if f > 0 else " - ") + term)
    return "".join(parts)


def format_ratfun2(num: BiPoly, den: BiPoly) -> str:
    if den == BiPoly.one():
        return format_bipoly(num)
    return f"({format_bipoly(num)})/({format_bipoly(den)})"
