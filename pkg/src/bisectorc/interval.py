"""Closed intervals with rational endpoints and outward-rounded square roots."""

import math
from dataclasses import dataclass
from fractions import Fraction

from .rational import Rat, as_rat


@dataclass(frozen=True)
class Interval:
    lo: Rat
    hi: Rat

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        x = as_rat(x)
        return cls(x, x)

    @staticmethod
    def coerce(x) -> "Interval":
        return x if isinstance(x, Interval) else Interval.point(x)

    @property
    def width(self) -> Rat:
        return self.hi - self.lo

    @property
    def mid(self) -> Rat:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other):
        o = Interval.coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-Interval.coerce(other))

    def __rsub__(self, other):
        return Interval.coerce(other) - self

    def __mul__(self, other):
        o = Interval.coerce(other)
        ps = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Interval.coerce(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError(f"division by interval containing 0: {o}")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, other):
        return Interval.coerce(other) / self

    def sqrt(self, bits: int = 64) -> "Interval":
        """Enclosure of the square root with dyadic endpoints of ``bits`` fractional bits."""
        if self.lo < 0:
            raise ValueError(f"square root of interval with negative part: {self}")
        scale = 4 ** bits
        lo_sq = self.lo * scale
        hi_sq = self.hi * scale
        lo = math.isqrt(lo_sq.numerator // lo_sq.denominator)
        hi = math.isqrt(-(-hi_sq.numerator // hi_sq.denominator))
        if hi * hi < hi_sq:
            hi += 1
        return Interval(Fraction(lo, 2 ** bits), Fraction(hi, 2 ** bits))
