"""Exact arithmetic in Q and in a single real quadratic field Q(sqrt d).

Every coordinate and length in the package is a :class:`QuadNum`.  Numbers
with a zero irrational part are plain rationals and combine with numbers from
any field; two numbers with different irrational radicands cannot be combined.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Union

from .numtheory import squarefree_split

__all__ = [
    "DomainError",
    "FieldMismatch",
    "QuadNum",
    "Rational",
    "as_quad",
    "normalize_sqrt",
    "parse_number",
    "sign",
    "arith",
]

Rational = Fraction
Number = Union[int, Fraction, "QuadNum"]


class FieldMismatch(ValueError):
    """Raised when numbers from two different quadratic fields are combined."""


class DomainError(ValueError):
    """An argument outside the domain of an operation."""


class QuadNum:
    """The number ``rat + irr * sqrt(radicand)``.

    Invariants: ``radicand`` is square-free; when ``irr == 0`` the radicand is
    stored as 1, so a rational has a single representation.
    """

    __slots__ = ("rat", "irr", "radicand", "_hash")

    def __init__(self, rat=0, irr=0, radicand: int = 1) -> None:
        rat = Fraction(rat)
        irr = Fraction(irr)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if irr and radicand not in (0, 1):
            k, d = squarefree_split(radicand)
            if d == 1:
                rat, irr, radicand = rat + irr * k, Fraction(0), 1
            else:
                irr, radicand = irr * k, d
        elif radicand == 1:
            rat, irr = rat + irr, Fraction(0)
        else:
            irr = Fraction(0)
        if not irr:
            radicand = 1
        self.rat = rat
        self.irr = irr
        self.radicand = radicand
        self._hash = None

    @classmethod
    def _raw(cls, rat: Fraction, irr: Fraction, radicand: int) -> QuadNum:
        # caller guarantees normalization
        q = object.__new__(cls)
        q.rat = rat
        q.irr = irr
        q.radicand = radicand if irr else 1
        q._hash = None
        return q

    # -- inspection -------------------------------------------------------
    def is_rational(self) -> bool:
        return not self.irr

    def conjugate(self) -> QuadNum:
        return QuadNum._raw(self.rat, -self.irr, self.radicand)

    def norm(self) -> Fraction:
        """Field norm (self * conjugate), a rational."""
        return self.rat * self.rat - self.irr * self.irr * self.radicand

    def sign(self) -> int:
        return sign(self)

    def __float__(self) -> float:
        if not self.irr:
            return float(self.rat)
        return float(self.rat) + float(self.irr) * self.radicand ** 0.5

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.irr)

    # -- arithmetic -------------------------------------------------------
    def _common(self, other) -> int:
        d1, d2 = self.radicand, other.radicand
        if d1 == d2 or d2 == 1:
            return d1
        if d1 == 1:
            return d2
        raise FieldMismatch(f"cannot combine sqrt({d1}) with sqrt({d2})")

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common(other)
        return QuadNum._raw(self.rat + other.rat, self.irr + other.irr, d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common(other)
        return QuadNum._raw(self.rat - other.rat, self.irr - other.irr, d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> QuadNum:
        return QuadNum._raw(-self.rat, -self.irr, self.radicand)

    def __pos__(self) -> QuadNum:
        return self

    def __abs__(self) -> QuadNum:
        return -self if sign(self) < 0 else self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.irr:
            return QuadNum._raw(self.rat * other.rat, self.irr * other.rat, self.radicand)
        if not self.irr:
            return QuadNum._raw(self.rat * other.rat, self.rat * other.irr, other.radicand)
        d = self._common(other)
        return QuadNum._raw(
            self.rat * other.rat + self.irr * other.irr * d,
            self.rat * other.irr + self.irr * other.rat,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero QuadNum")
        if not other.irr:
            return QuadNum._raw(self.rat / other.rat, self.irr / other.rat, self.radicand)
        self._common(other)
        n = other.norm()
        num = self * other.conjugate()
        return QuadNum._raw(num.rat / n, num.irr / n, num.radicand)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int) -> QuadNum:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return QuadNum(1) / (self ** -k)
        result = QuadNum(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.rat == other.rat and self.irr == other.irr and (
            not self.irr or self.radicand == other.radicand
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rat) if not self.irr else hash((self.rat, self.irr, self.radicand))
        return self._hash

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) >= 0

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        if not self.irr:
            return _fmt(self.rat)
        op = "+" if self.irr > 0 else "-"
        return f"{_fmt(self.rat)}{op}{_fmt(abs(self.irr))}*sqrt({self.radicand})"

    def __repr__(self) -> str:
        return f"QuadNum('{self}')"

    def __reduce__(self):
        return (QuadNum, (self.rat, self.irr, self.radicand))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coerce(x):
    if isinstance(x, QuadNum):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadNum._raw(Fraction(x), Fraction(0), 1)
    return NotImplemented


def as_quad(x: Number | str) -> QuadNum:
    if isinstance(x, str):
        return parse_number(x)
    q = _coerce(x)
    if q is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to QuadNum")
    return q


def sign(x: Number) -> int:
    """Exact sign of ``r + s*sqrt(d)``."""
    if not isinstance(x, QuadNum):
        return (x > 0) - (x < 0)
    r, s = x.rat, x.irr
    if not s:
        return (r > 0) - (r < 0)
    rs = (r > 0) - (r < 0)
    ss = 1 if s > 0 else -1
    if rs == 0 or rs == ss:
        return ss
    # opposite signs: compare r^2 with s^2 d
    diff = r * r - s * s * x.radicand
    return rs if diff > 0 else -rs  # diff == 0 impossible for square-free d > 1


def arith(x: Number, y: Number, op: str) -> QuadNum:
    x, y = as_quad(x), as_quad(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def normalize_sqrt(q: Number) -> QuadNum:
    """The nonnegative square root of a nonnegative rational, as a QuadNum."""
    q = as_quad(q)
    if q.irr:
        raise ValueError(f"square root of irrational {q} is not quadratic")
    r = q.rat
    if r < 0:
        raise DomainError(f"square root of negative number {r}")
    num, den = r.numerator, r.denominator
    if _is_sq(num) and _is_sq(den):
        return QuadNum(Fraction(isqrt(num), isqrt(den)))
    k, d = squarefree_split(num * den)
    return QuadNum._raw(Fraction(0), Fraction(k, den), d)


def _is_sq(n: int) -> bool:
    r = isqrt(n)
    return r * r == n


_RAT = r"-?\d+(?:/\d+)?"
_NUMBER_RE = re.compile(rf"^({_RAT})(?:([+-])({_RAT.lstrip('-?')})\*sqrt\((\d+)\))?$")


def _parse_rat(s: str) -> Fraction:
    if "/" in s:
        n, d = s.split("/")
        if int(d) == 0:
            raise ValueError("zero denominator")
        return Fraction(int(n), int(d))
    return Fraction(int(s))


def parse_number(text: str) -> QuadNum:
    """Parse ``INT``, ``INT/INT`` or ``R(+|-)R*sqrt(INT)`` exactly."""
    m = _NUMBER_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed number {text!r}")
    rat = _parse_rat(m.group(1))
    if m.group(2) is None:
        return QuadNum(rat)
    irr = _parse_rat(m.group(3))
    if m.group(2) == "-":
        irr = -irr
    return QuadNum(rat, irr, int(m.group(4)))
