"""Exact scalar arithmetic: the rationals and prime fields.

Every computation in this package is exact.  Rational scalars are
``fractions.Fraction``; prime-field scalars are ``Fp`` instances that
overload the usual operators, so generic linear algebra code works over
either field without dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Fp:
    """An element of the prime field with ``p`` elements."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def __add__(self, other):
        return Fp(self.val + self._v(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.val - self._v(other), self.p)

    def __rsub__(self, other):
        return Fp(self._v(other) - self.val, self.p)

    def __mul__(self, other):
        return Fp(self.val * self._v(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __truediv__(self, other):
        o = other if isinstance(other, Fp) else Fp(other, self.p)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Fp(self._v(other), self.p) / self

    def inverse(self) -> "Fp":
        if self.val == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return Fp(pow(self.val, self.p - 2, self.p), self.p)

    def _v(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.val
        if isinstance(other, int):
            return other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        if isinstance(other, Fraction):
            return other.denominator == 1 and self == int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d mod %d" % (self.val, self.p)


@dataclass(frozen=True)
class Field:
    """Field descriptor: ``p is None`` means the rationals."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError("field characteristic must be prime, got %r" % (self.p,))

    def of(self, n: int):
        """Embed an integer."""
        if self.p is None:
            return Fraction(n)
        return Fp(n, self.p)

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    def format_scalar(self, x) -> str:
        if self.p is None:
            return str(x)
        return "%d mod %d" % (x.val, self.p)

    def __str__(self):
        return "Q" if self.p is None else "F%d" % self.p

    @staticmethod
    def parse(text: str) -> "Field":
        """Parse ``"Q"`` or ``"F<p>"``."""
        text = text.strip()
        if text in ("Q", "QQ", "q"):
            return Field(None)
        if text and text[0] in "Ff":
            return Field(int(text[1:]))
        raise ValueError("cannot parse field %r (expected Q or F<p>)" % text)


QQ = Field(None)
