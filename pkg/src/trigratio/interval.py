"""Outward-rounded interval arithmetic for rigorous sign certification.

Every operation returns an interval guaranteed to contain the exact result
for any points of the input intervals.  Arithmetic relies on IEEE-754
correct rounding plus a one-ulp outward inflation via math.nextafter;
transcendental enclosures decompose the argument into monotonic pieces and
inflate libm endpoint values by two ulps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_INF = math.inf


def _down(v: float) -> float:
    return math.nextafter(v, -_INF)


def _up(v: float) -> float:
    return math.nextafter(v, _INF)


def _down2(v: float) -> float:
    return _down(_down(v))


def _up2(v: float) -> float:
    return _up(_up(v))


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: float) -> "Interval":
        return cls(v, v)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    @property
    def strictly_positive(self) -> bool:
        return self.lo > 0.0

    @property
    def strictly_negative(self) -> bool:
        return self.hi < 0.0

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def _coerce(other) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval(other, other)

    def __add__(self, other) -> "Interval":
        o = Interval._coerce(other)
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        return self + (-Interval._coerce(other))

    def __rsub__(self, other) -> "Interval":
        return Interval._coerce(other) + (-self)

    def __mul__(self, other) -> "Interval":
        o = Interval._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(products)), _up(max(products)))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.lo <= 0.0 <= self.hi:
            raise ZeroDivisionError(f"interval [{self.lo}, {self.hi}] contains 0")
        return Interval(_down(1.0 / self.hi), _up(1.0 / self.lo))

    def __truediv__(self, other) -> "Interval":
        return self * Interval._coerce(other).reciprocal()

    def __rtruediv__(self, other) -> "Interval":
        return Interval._coerce(other) * self.reciprocal()

    def __pow__(self, n: int) -> "Interval":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        if n == 0:
            return Interval(1.0, 1.0)
        lo_p, hi_p = self.lo**n, self.hi**n
        if n % 2 == 1:
            return Interval(_down(lo_p), _up(hi_p))
        if self.lo <= 0.0 <= self.hi:
            return Interval(0.0, _up(max(lo_p, hi_p)))
        return Interval(_down(min(lo_p, hi_p)), _up(max(lo_p, hi_p)))

    def split(self) -> tuple["Interval", "Interval"]:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    # --- transcendental enclosures -----------------------------------------

    def sin(self) -> "Interval":
        a, b = self.lo, self.hi
        if b - a >= 2.0 * math.pi:
            return Interval(-1.0, 1.0)
        lo = min(_down2(math.sin(a)), _down2(math.sin(b)))
        hi = max(_up2(math.sin(a)), _up2(math.sin(b)))
        # widen the critical-point test so pi rounding can only add slack
        slack = 1e-9 * (1.0 + max(abs(a), abs(b)))
        n0 = math.floor((a - HALF_PI_LO) / TWO_PI) - 1
        n1 = math.floor((b + slack - HALF_PI_LO) / TWO_PI) + 1
        for n in range(n0, n1 + 1):
            crit = HALF_PI_LO + TWO_PI * n
            if a - slack <= crit <= b + slack:
                hi = 1.0
            crit = -HALF_PI_LO + TWO_PI * n
            if a - slack <= crit <= b + slack:
                lo = -1.0
        return Interval(max(lo, -1.0), min(hi, 1.0))

    def cos(self) -> "Interval":
        return (self + Interval(HALF_PI_LO, HALF_PI_HI)).sin()

    def sinh(self) -> "Interval":
        return Interval(_down2(math.sinh(self.lo)), _up2(math.sinh(self.hi)))

    def cosh(self) -> "Interval":
        lo_c, hi_c = math.cosh(self.lo), math.cosh(self.hi)
        if self.lo <= 0.0 <= self.hi:
            return Interval(1.0, _up2(max(lo_c, hi_c)))
        return Interval(_down2(min(lo_c, hi_c)), _up2(max(lo_c, hi_c)))


HALF_PI_LO = _down(math.pi / 2.0)
HALF_PI_HI = _up(math.pi / 2.0)
TWO_PI = 2.0 * math.pi
