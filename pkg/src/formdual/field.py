"""Exact scalars: rationals plus the real quadratic extensions Q(sqrt(d))."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rational = int | Fraction


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write a positive integer n as s*s*d with d squarefree; returns (s, d)."""
    if n <= 0:
        raise ValueError("need a positive integer")
    s, d = 1, 1
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return s, d


def sqrt_exact(x: Fraction | int):
    """Exact square root of a nonnegative rational: Fraction or QuadExt."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    # sqrt(p/q) = sqrt(p*q)/q
    pq = x.numerator * x.denominator
    s, d = squarefree_decompose(pq)
    if d == 1:
        return Fraction(s, x.denominator)
    return QuadExt(0, Fraction(s, x.denominator), d)


class QuadExt:
    """An element a + b*sqrt(d) of Q(sqrt(d)), d squarefree > 1, exact."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d <= 1:
            raise ValueError("d must be a squarefree integer > 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.b == 0:
                return QuadExt(other.a, 0, self.d)
            if other.d != self.d:
                raise ValueError(f"mixing sqrt({self.d}) with sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _normalize(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _normalize(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _normalize(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.b * self.b * self.d
        if n == 0:
            raise ZeroDivisionError("zero element of Q(sqrt(d))")
        return _normalize(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def conjugate(self):
        return _normalize(self.a, -self.b, self.d)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"({self.a}+{self.b}*sqrt({self.d}))"


def _normalize(a: Fraction, b: Fraction, d: int):
    """Collapse to a plain Fraction when the irrational part cancels."""
    if b == 0:
        return a
    return QuadExt(a, b, d)


def is_rational(x) -> bool:
    if isinstance(x, QuadExt):
        return x.b == 0
    return isinstance(x, (int, Fraction))


def as_fraction(x) -> Fraction:
    if isinstance(x, QuadExt):
        if x.b != 0:
            raise ValueError(f"{x!r} is not rational")
        return x.a
    return Fraction(x)
