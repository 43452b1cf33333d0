"""Real and complex interval arithmetic with dyadic endpoints.

Endpoints are exact ``Fraction`` values whose denominators are powers of
two.  Every operation computes the exact result and rounds it outward to
``working_precision()`` significant bits, so the enclosure property holds
unconditionally.  The precision lives in a context variable.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from decimal import Context, Decimal
from fractions import Fraction
from typing import Union

_precision: ContextVar[int] = ContextVar("working_precision", default=192)

Rational = Union[int, Fraction]


def working_precision() -> int:
    return _precision.get()


@contextmanager
def precision(bits: int):
    token = _precision.set(max(int(bits), 16))
    try:
        yield
    finally:
        _precision.reset(token)


def _floor_dyadic(q: Fraction, k: int) -> Fraction:
    """Largest multiple of 2**-k that is <= q."""
    n, d = q.numerator, q.denominator
    if k >= 0:
        return Fraction((n << k) // d, 1 << k)
    return Fraction((n // (d << -k)) << -k)


def _ceil_dyadic(q: Fraction, k: int) -> Fraction:
    return -_floor_dyadic(-q, k)


def _scale_exp(q: Fraction, prec: int) -> int:
    e = q.numerator.bit_length() - q.denominator.bit_length()
    return prec - e


def round_down(q: Rational, prec: int | None = None) -> Fraction:
    q = Fraction(q)
    if q == 0:
        return q
    if prec is None:
        prec = _precision.get()
    d = q.denominator
    if d & (d - 1) == 0 and q.numerator.bit_length() <= prec:
        return q
    return _floor_dyadic(q, _scale_exp(q, prec))


def round_up(q: Rational, prec: int | None = None) -> Fraction:
    return -round_down(-Fraction(q), prec)


def grid_floor(q: Rational, g: int) -> Fraction:
    """Round down to the absolute grid 2**-g."""
    return _floor_dyadic(Fraction(q), g)


def grid_ceil(q: Rational, g: int) -> Fraction:
    return _ceil_dyadic(Fraction(q), g)


def preview(q: Rational, digits: int = 12) -> str:
    """Decimal preview with ``digits`` significant digits (display only)."""
    q = Fraction(q)
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(q.numerator), Decimal(q.denominator)))


def fraction_str(q: Rational) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class RealInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Rational, hi: Rational | None = None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def coerce(cls, x) -> "RealInterval":
        return x if isinstance(x, RealInterval) else cls(x)

    # -- geometry -----------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    center = mid

    @property
    def radius(self) -> Fraction:
        return self.width / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, RealInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other: "RealInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def hull(self, other: "RealInterval") -> "RealInterval":
        return RealInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: "RealInterval") -> "RealInterval":
        return RealInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def mag(self) -> Fraction:
        """Largest absolute value in the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> Fraction:
        """Smallest absolute value in the interval."""
        if self.contains_zero():
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def pad_to_grid(self, g: int) -> "RealInterval":
        """Widen outward to the grid 2**-g plus one extra grid step on each side.

        Used for published enclosures: any enclosure of the same quantity
        narrower than 2**-g is then contained in the padded one.
        """
        step = Fraction(1, 1 << g) if g >= 0 else Fraction(1 << -g)
        return RealInterval(grid_floor(self.lo, g) - step, grid_ceil(self.hi, g) + step)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return RealInterval(-self.hi, -self.lo)

    def __add__(self, other):
        if isinstance(other, ComplexInterval):
            return NotImplemented
        o = RealInterval.coerce(other)
        return RealInterval(round_down(self.lo + o.lo), round_up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ComplexInterval):
            return NotImplemented
        o = RealInterval.coerce(other)
        return RealInterval(round_down(self.lo - o.hi), round_up(self.hi - o.lo))

    def __rsub__(self, other):
        if isinstance(other, ComplexInterval):
            return NotImplemented
        return RealInterval.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, ComplexInterval):
            return NotImplemented
        o = RealInterval.coerce(other)
        if self.is_point() and o.is_point():
            p = self.lo * o.lo
            return RealInterval(round_down(p), round_up(p))
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RealInterval(round_down(min(ps)), round_up(max(ps)))

    __rmul__ = __mul__

    def reciprocal(self) -> "RealInterval":
        if self.contains_zero():
            raise ZeroDivisionError("interval reciprocal of an interval containing 0")
        return RealInterval(round_down(1 / self.hi), round_up(1 / self.lo))

    def __truediv__(self, other):
        return self * RealInterval.coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return RealInterval.coerce(other) * self.reciprocal()

    def sqr(self) -> "RealInterval":
        lo2, hi2 = self.lo * self.lo, self.hi * self.hi
        if self.contains_zero():
            return RealInterval(0, round_up(max(lo2, hi2)))
        return RealInterval(round_down(min(lo2, hi2)), round_up(max(lo2, hi2)))

    def __pow__(self, k: int):
        out = RealInterval(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, RealInterval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"RealInterval({fraction_str(self.lo)}, {fraction_str(self.hi)})"

    def preview(self, digits: int = 12) -> str:
        return f"{preview(self.mid, digits)} +/- {preview(self.radius, 3)}"


DyadicInterval = RealInterval


class ComplexInterval:
    """Rectangular complex enclosure ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = RealInterval.coerce(re)
        self.im = RealInterval.coerce(im)

    @classmethod
    def coerce(cls, x) -> "ComplexInterval":
        if isinstance(x, ComplexInterval):
            return x
        if isinstance(x, RealInterval):
            return cls(x, 0)
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x, 0)

    @property
    def center(self) -> tuple[Fraction, Fraction]:
        return (self.re.mid, self.im.mid)

    @property
    def radius(self) -> Fraction:
        """Half-width in the max norm."""
        return max(self.re.radius, self.im.radius)

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def contains(self, z) -> bool:
        if isinstance(z, ComplexInterval):
            return self.re.contains(z.re) and self.im.contains(z.im)
        if isinstance(z, tuple):
            return self.re.contains(z[0]) and self.im.contains(z[1])
        return self.re.contains(z) and self.im.contains(0)

    def overlaps(self, other: "ComplexInterval") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def conj(self) -> "ComplexInterval":
        return ComplexInterval(self.re, -self.im)

    def abs2(self) -> RealInterval:
        return self.re.sqr() + self.im.sqr()

    def pad_to_grid(self, g: int) -> "ComplexInterval":
        return ComplexInterval(self.re.pad_to_grid(g), self.im.pad_to_grid(g))

    def hull(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(self.re.hull(other.re), self.im.hull(other.im))

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __add__(self, other):
        o = ComplexInterval.coerce(other)
        return ComplexInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = ComplexInterval.coerce(other)
        return ComplexInterval(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return ComplexInterval.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RealInterval)):
            return ComplexInterval(self.re * other, self.im * other)
        o = ComplexInterval.coerce(other)
        return ComplexInterval(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def reciprocal(self) -> "ComplexInterval":
        n = self.abs2()
        if n.contains_zero():
            raise ZeroDivisionError("complex interval reciprocal of an interval containing 0")
        return ComplexInterval(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, RealInterval)):
            return self * RealInterval.coerce(other).reciprocal()
        return self * ComplexInterval.coerce(other).reciprocal()

    def __pow__(self, k: int):
        out = ComplexInterval(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, ComplexInterval) and self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexInterval({self.re!r}, {self.im!r})"

    def preview(self, digits: int = 12) -> str:
        im = self.im.mid
        sign = "-" if im < 0 else "+"
        return f"{preview(self.re.mid, digits)} {sign} {preview(abs(im), digits)}i"


DyadicComplexInterval = ComplexInterval


def horner(coeffs, x):
    """Evaluate a polynomial (lowest degree first, rational coefficients) at an interval."""
    acc = None
    for c in reversed(coeffs):
        acc = RealInterval.coerce(c) if acc is None else acc * x + c
    if acc is None:
        return RealInterval(0) if isinstance(x, RealInterval) else ComplexInterval(0)
    if isinstance(x, ComplexInterval) and isinstance(acc, RealInterval):
        return ComplexInterval(acc)
    return acc
