"""Exact arithmetic in the golden field Q(sqrt 5).

Elements are stored as ``a + b*phi`` with rational ``a``, ``b`` and
``phi**2 == phi + 1``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

_SQRT5 = 5 ** 0.5
_PHI_FLOAT = (1 + _SQRT5) / 2


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class GoldenNumber:
    """Immutable element ``a + b*phi`` of Q(sqrt 5)."""

    __slots__ = ("_a", "_b")

    def __init__(self, a=0, b=0):
        self._a = _as_fraction(a)
        self._b = _as_fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        return cls(x, 0)

    def __repr__(self) -> str:
        return f"GoldenNumber({self._a!s}, {self._b!s})"

    def __str__(self) -> str:
        return format_golden(self)

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __eq__(self, other) -> bool:
        if isinstance(other, GoldenNumber):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self._a, -self._b)

    def __pos__(self) -> GoldenNumber:
        return self

    def __add__(self, other) -> GoldenNumber:
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other) -> GoldenNumber:
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self._a - other._a, self._b - other._b)

    def __rsub__(self, other) -> GoldenNumber:
        return (-self) + other

    def __mul__(self, other) -> GoldenNumber:
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        # (a + b phi)(c + d phi) = ac + (ad + bc) phi + bd (phi + 1)
        bd = b * d
        return GoldenNumber(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def conjugate(self) -> GoldenNumber:
        """Galois conjugate, sending phi to 1 - phi."""
        return GoldenNumber(self._a + self._b, -self._b)

    def norm(self) -> Fraction:
        """Field norm ``a**2 + a*b - b**2``."""
        a, b = self._a, self._b
        return a * a + a * b - b * b

    def inverse(self) -> GoldenNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GoldenNumber division by zero")
        c = self.conjugate()
        return GoldenNumber(c._a / n, c._b / n)

    def __truediv__(self, other) -> GoldenNumber:
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> GoldenNumber:
        return GoldenNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> GoldenNumber:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * _PHI_FLOAT

    def is_rational(self) -> bool:
        return self._b == 0


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
PHI = GoldenNumber(0, 1)
PHI_INV = GoldenNumber(-1, 1)


def golden(a=0, b=0) -> GoldenNumber:
    """Return ``a + b*phi``."""
    return GoldenNumber(a, b)


def _format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_golden(x: GoldenNumber) -> str:
    """Canonical text form ``p/q + r/s*phi`` (both parts always printed)."""
    b = x.b
    sign = "-" if b < 0 else "+"
    return f"{_format_fraction(x.a)} {sign} {_format_fraction(abs(b))}*phi"


def parse_golden(text: str) -> GoldenNumber:
    """Inverse of :func:`format_golden`."""
    parts = text.replace("*phi", "").split()
    if len(parts) != 3 or parts[1] not in "+-":
        raise ValueError(f"not a golden number: {text!r}")
    b = Fraction(parts[2])
    return GoldenNumber(Fraction(parts[0]), b if parts[1] == "+" else -b)
