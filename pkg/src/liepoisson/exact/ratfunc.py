"""Rational functions in parameter variables: the coefficient field K = Q(t1, ..., tm)."""
from __future__ import annotations

import re
from typing import Mapping, Optional

from gmpy2 import mpq

from ..errors import ParseError
from .poly import Poly, VarId, _SCALARS, format_poly, parse_poly, poly_cofactors, to_q


class RatFunc:
    """Reduced quotient num/den with a monic denominator.

    Both parts may only involve parameter variables.  ``0/0`` is unrepresentable.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        num = Poly.coerce(num)
        den = Poly.coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.has_coordinates() or den.has_coordinates():
                raise ValueError("RatFunc parts must involve parameters only")
            if num.is_zero:
                den = Poly.const(1)
            elif not den.is_constant:
                _, num, den = poly_cofactors(num, den)
            lc = den.leading_coeff()
            if lc != 1:
                inv = 1 / lc
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls(x)
        if isinstance(x, _SCALARS):
            c = to_q(x)
            return cls(Poly.const(c), Poly.const(1), _reduced=True)
        raise TypeError(f"cannot coerce {x!r} to RatFunc")

    # predicates
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    @property
    def is_poly(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> mpq:
        return self.num.constant_value() / self.den.constant_value()

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly,) + _SCALARS):
            return self == RatFunc.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # arithmetic
    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.den.is_constant and other.den.is_constant:
            return RatFunc(self.num + other.num, Poly.const(1), _reduced=True)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            c = to_q(other)
            return RatFunc(self.num.scale(c), self.den, _reduced=True) if c else RatFunc()
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc()
        if self.den.is_constant and other.den.is_constant:
            return RatFunc(self.num * other.num, Poly.const(1), _reduced=True)
        if other.is_constant:
            return RatFunc(self.num.scale(other.constant_value()), self.den, _reduced=True)
        if self.is_constant:
            return RatFunc(other.num.scale(self.constant_value()), other.den, _reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_constant:
            c = other.constant_value()
            if not c:
                raise ZeroDivisionError("division by zero")
            return RatFunc(self.num.scale(1 / c), self.den, _reduced=True)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def evaluate(self, assignment: Mapping[VarId, object]) -> mpq:
        d = self.den.evaluate(assignment)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the sample point")
        return self.num.evaluate(assignment) / d

    def to_str(self, namer=None) -> str:
        if self.den == Poly.const(1):
            return format_poly(self.num, namer)
        return f"({format_poly(self.num, namer)})/({format_poly(self.den, namer)})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFunc({self.to_str()!r})"


ZERO = RatFunc()
ONE = RatFunc(1)

_FRACTION = re.compile(r"^\s*\((.*)\)\s*/\s*\((.*)\)\s*$")


def parse_ratfunc(text: str, names: Optional[Mapping[str, VarId]] = None) -> RatFunc:
    """Parse ``poly`` or ``(poly)/(poly)`` in the canonical grammar."""
    m = _FRACTION.match(text)
    try:
        if m:
            return RatFunc(parse_poly(m.group(1), names), parse_poly(m.group(2), names))
        return RatFunc(parse_poly(text, names))
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad coefficient {text!r}: {exc}") from exc
