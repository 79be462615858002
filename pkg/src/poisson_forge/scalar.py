"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

_MPQ = type(mpq(0))
_ZQ = mpq(0)
_new = object.__new__


def _to_mpq(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int) or type(x).__name__ in ("mpz", "mpq"):
        return mpq(x)
    if isinstance(x, (Fraction, Rational)):
        return mpq(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Scalar:
    """An element of Q[i]. Treat as immutable; both parts are canonical ``mpq``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            self.re, self.im = re.re, re.im
            return
        self.re = re if type(re) is _MPQ else _to_mpq(re)
        self.im = im if type(im) is _MPQ else _to_mpq(im)

    @classmethod
    def _new(cls, re, im):
        s = _new(cls)
        s.re = re
        s.im = im
        return s

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational, _MPQ)):
            return cls(value)
        if isinstance(value, complex):
            raise TypeError("floating point complex numbers are not exact; use Scalar(re, im)")
        raise TypeError(f"cannot interpret {value!r} as a Scalar")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not (self.re or self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational, _MPQ)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return Scalar._new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._new(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return Scalar._new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._new(a * c, _ZQ)
        return Scalar._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar._new(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._new(self.re, -self.im)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)

    def to_json(self) -> dict:
        return {
            "re": [int(self.re.numerator), int(self.re.denominator)],
            "im": [int(self.im.numerator), int(self.im.denominator)],
        }

    @classmethod
    def from_json(cls, re, im) -> "Scalar":
        return cls(_fraction_from_pair(re), _fraction_from_pair(im))


def _fraction_from_pair(pair):
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f"expected [numerator, denominator], got {pair!r}")
    num, den = pair
    if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) or isinstance(den, bool):
        raise ValueError(f"numerator and denominator must be integers, got {pair!r}")
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {pair!r}")
    return mpq(num, den)


def _format_fraction(q) -> str:
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def format_scalar(s: Scalar) -> str:
    """Render in the CLI grammar: ``3``, ``-1/2``, ``i``, ``(1/2+i)``, ``-2*i``."""
    re, im = s.re, s.im
    if not im:
        return _format_fraction(re)
    if im == 1:
        im_str = "i"
    elif im == -1:
        im_str = "-i"
    else:
        im_str = f"{_format_fraction(im)}*i"
    if not re:
        return im_str
    sep = "" if im_str.startswith("-") else "+"
    return f"({_format_fraction(re)}{sep}{im_str})"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
