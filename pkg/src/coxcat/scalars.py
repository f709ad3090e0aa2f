"""Exact scalar fields used by root-system realizations.

Crystallographic systems work over :class:`fractions.Fraction`.  Systems with a
bond labelled 5 need the golden ratio, so they work over the quadratic field
Q(sqrt 5), implemented here as :class:`QSqrt5`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


class QSqrt5:
    """An element ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    >>> phi = QSqrt5(Fraction(1, 2), Fraction(1, 2))
    >>> phi * phi == phi + 1
    True
    >>> (phi - 2).sign()
    -1
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _lift(other) -> QSqrt5 | None:
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt5(other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def inverse(self) -> QSqrt5:
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return QSqrt5(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        lhs, rhs = self.a * self.a, 5 * self.b * self.b
        if lhs == rhs:
            return 0  # unreachable for rationals, kept for totality
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        op = "+" if self.b > 0 else "-"
        return f"{self.a}{op}{abs(self.b)}*sqrt5"


GOLDEN_RATIO = QSqrt5(Fraction(1, 2), Fraction(1, 2))


def sign(value) -> int:
    """Exact sign of a Fraction, int or QSqrt5."""
    if isinstance(value, QSqrt5):
        return value.sign()
    return (value > 0) - (value < 0)


class ZPhi:
    """An element ``a + b*phi`` of the ring Z[phi], ``phi`` the golden ratio.

    Used for division-free elimination; only ring operations are provided.

    >>> phi = ZPhi(0, 1)
    >>> phi * phi == phi + ZPhi(1)
    True
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    def __add__(self, other: ZPhi) -> ZPhi:
        return ZPhi(self.a + other.a, self.b + other.b)

    def __sub__(self, other: ZPhi) -> ZPhi:
        return ZPhi(self.a - other.a, self.b - other.b)

    def __neg__(self) -> ZPhi:
        return ZPhi(-self.a, -self.b)

    def __mul__(self, other: ZPhi) -> ZPhi:
        bd = self.b * other.b
        return ZPhi(self.a * other.a + bd, self.a * other.b + self.b * other.a + bd)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return isinstance(other, ZPhi) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"ZPhi({self.a}, {self.b})"


def to_ring(values, golden: bool) -> list:
    """Scale field elements by a common positive integer so they lie in Z
    (or Z[phi] when ``golden``).  Only ratios and zero tests survive, which is
    all the fixed-space computations need."""
    if not golden:
        fr = [Fraction(v) for v in values]
        den = 1
        for v in fr:
            den = den * v.denominator // _gcd(den, v.denominator)
        return [int(v * den) for v in fr]
    # a + b sqrt5 = (a - b) + 2b phi
    pairs = [(v.a - v.b, 2 * v.b) if isinstance(v, QSqrt5) else (Fraction(v), Fraction(0)) for v in values]
    den = 1
    for x, y in pairs:
        for d in (x.denominator, y.denominator):
            den = den * d // _gcd(den, d)
    return [ZPhi(int(x * den), int(y * den)) for x, y in pairs]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
