"""Exact scalars: rational multiples of pi and elements of Q(sqrt 2).

Every frequency coordinate in the package is a :class:`PiScalar`, i.e. a
rational number ``c`` standing for the real number ``c*pi``.  Amplitudes of
step functions are :class:`Q2Value` instances ``a + b*sqrt2``.  Nothing in
this module rounds.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "PiScalar",
    "Q2Value",
    "SQRT2",
    "INV_SQRT2",
    "as_fraction",
    "floor_log2",
    "q2_abs_sq",
    "q2_mul",
    "is_unimodular",
    "two_adic_valuation",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"16/3"`` to a Fraction.

    Floats are rejected on purpose: they would smuggle rounding into the
    exact path.
    """
    if type(value) is Fraction:
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if text.endswith("*pi"):
            text = text[:-3].strip()
        elif text == "pi":
            text = "1"
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class PiScalar(Fraction):
    """The real number ``coeff * pi`` with ``coeff`` an exact rational.

    Behaves like the Fraction ``coeff`` for comparisons and hashing, so the
    order of PiScalars is the order of the reals they represent.  Sums,
    differences and rational multiples stay PiScalars; the ratio of two
    PiScalars is a plain Fraction.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        if denominator is None and isinstance(numerator, str):
            numerator = as_fraction(numerator)
        return super().__new__(cls, numerator, denominator)

    @classmethod
    def parse(cls, text: str) -> PiScalar:
        """Parse ``"p/q*pi"``, ``"p/q"`` or ``"pi"``."""
        return cls(as_fraction(text))

    @property
    def coeff(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __repr__(self) -> str:
        return f"PiScalar({self.coeff_str()})"

    def __str__(self) -> str:
        return f"{self.coeff_str()}*pi"

    def coeff_str(self) -> str:
        return str(self.coeff)

    def to_float(self) -> float:
        return float(self.coeff) * math.pi

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiScalar(Fraction.__add__(self, other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiScalar(Fraction.__sub__(self, other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiScalar(Fraction.__rsub__(self, other))
        return NotImplemented

    def __neg__(self):
        return PiScalar(-self.numerator, self.denominator)

    def __abs__(self):
        return PiScalar(abs(self.numerator), self.denominator)

    def __mul__(self, other):
        if isinstance(other, PiScalar):
            raise TypeError("product of two PiScalars is not a multiple of pi")
        if isinstance(other, (int, Fraction)):
            return PiScalar(Fraction.__mul__(self, other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScalar):
            return Fraction.__truediv__(self, other)
        if isinstance(other, (int, Fraction)):
            return PiScalar(Fraction.__truediv__(self, other))
        return NotImplemented

    def __reduce__(self):
        return (PiScalar, (self.numerator, self.denominator))


_Q2_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?:(?P<sign>[+-])\s*(?P<b>[+-]?\d+(?:/\d+)?)?\s*\*?\s*sqrt2)?\s*$"
)


class Q2Value:
    """An exact element ``a + b*sqrt2`` of the quadratic field Q(sqrt 2)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = as_fraction(a)
        self.b = as_fraction(b)

    @classmethod
    def parse(cls, text: str) -> Q2Value:
        """Inverse of :meth:`__str__`; also accepts bare rationals."""
        m = _Q2_RE.match(text)
        if m is None or (m.group("a") is None and m.group("sign") is None):
            raise ValueError(f"not a Q(sqrt2) literal: {text!r}")
        a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
        b = Fraction(0)
        if m.group("sign"):
            b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
            if m.group("sign") == "-":
                b = -b
        return cls(a, b)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt2"

    def __repr__(self) -> str:
        return f"Q2Value({self.a}, {self.b})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Q2Value):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Q2Value):
            return other
        if isinstance(other, (int, Fraction)):
            return Q2Value(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Q2Value(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Q2Value(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Q2Value(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Q2Value(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = Q2Value(1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate(self) -> Q2Value:
        """Galois conjugate ``a - b*sqrt2`` (not complex conjugation)."""
        return Q2Value(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 2 b^2``; zero only for the zero element."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> Q2Value:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return Q2Value(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(2.0)

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*sqrt2``."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 2 b^2
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0


SQRT2 = Q2Value(0, 1)
INV_SQRT2 = Q2Value(0, Fraction(1, 2))


def q2_mul(x: Q2Value, y: Q2Value) -> Q2Value:
    return x * y


def q2_abs_sq(x: Q2Value) -> Q2Value:
    """Squared modulus of a real amplitude."""
    return x * x


def is_unimodular(x: Q2Value) -> bool:
    return x * x == 1


def floor_log2(x: Fraction) -> int:
    """Largest integer ``n`` with ``2**n <= x`` for a positive rational ``x``."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("floor_log2 needs a positive argument")
    n = x.numerator.bit_length() - x.denominator.bit_length()
    # n is off by at most one
    if n >= 0:
        if x < (1 << n):
            n -= 1
    elif x < Fraction(1, 1 << -n):
        n -= 1
    return n


def two_adic_valuation(k: int) -> int:
    """Exponent of the largest power of two dividing a nonzero integer."""
    if k == 0:
        raise ValueError("the 2-adic valuation of 0 is infinite")
    k = abs(k)
    return (k & -k).bit_length() - 1
