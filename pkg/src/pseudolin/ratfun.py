"""Reduced rational functions over Q(x).

A :class:`RatFun` keeps ``num/den`` with ``gcd(num, den) = 1`` and a monic
denominator; zero is ``0/1``.  Construction always normalizes, so every
value in circulation is reduced.
"""

from __future__ import annotations

from fractions import Fraction

from pseudolin.poly import NEG_INF, Poly, format_poly, poly_gcd, poly_lcm


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as Poly")


class RatFun:
    """Quotient of two polynomials, always kept reduced with monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.lc
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> RatFun:
        return RatFun(0)

    @staticmethod
    def one() -> RatFun:
        return RatFun(1)

    @staticmethod
    def x() -> RatFun:
        return RatFun(Poly.x())

    @staticmethod
    def from_poly(p: Poly) -> RatFun:
        return RatFun(p)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == Poly.one()

    def is_strictly_proper(self) -> bool:
        """deg num < deg den (vacuously true for 0)."""
        return self.num.degree < self.den.degree or self.is_zero()

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        out = object.__new__(RatFun)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero to a negative power")
            return RatFun(self.den**(-n), self.num**(-n))
        return RatFun(self.num**n, self.den**n)

    def derivative(self) -> RatFun:
        return RatFun(self.num.derivative() * self.den
                      - self.num * self.den.derivative(),
                      self.den * self.den)

    def eval(self, point) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.eval(point) / d

    def compose_shift(self, c) -> RatFun:
        """Return f(x + c)."""
        return RatFun(self.num.shift(c), self.den.shift(c))

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.is_poly():
            return format_poly(self.num)
        num = format_poly(self.num)
        den = format_poly(self.den)
        if len(self.num.coeffs) > 1 or "/" in num:
            num = f"({num})"
        if len(self.den.coeffs) > 1 or "/" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFun({str(self)!r})"


def _coerce(value):
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RatFun(value)
    return NotImplemented


def common_denominator(values) -> Poly:
    """Monic lcm of the denominators of an iterable of RatFun."""
    out = Poly.one()
    for v in values:
        out = poly_lcm(out, v.den)
    return out


__all__ = ["RatFun", "common_denominator", "NEG_INF"]
