"""Quadratic envelope constants and two-sided bounds on the raw ratios.

Every family is strictly monotone on (0, pi/2), so its infimum and
supremum are the two endpoint limits.  All families are decreasing except
the two cos-type ones at p = 2, where the ordering reverses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .families import (
    DomainError,
    FamilyKind,
    HALF_PI,
    check_param_int,
    limit_at_half_pi,
    limit_at_zero,
)


class Direction(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class EnvelopeConstants:
    family: FamilyKind
    p: int
    lower: float
    upper: float
    direction: Direction


def envelope_constants(family: FamilyKind, p) -> EnvelopeConstants:
    """Sharp (lower, upper) constants with lower < f(x) < upper on (0, pi/2).

    Constants are computed from the limit formulas on demand rather than
    stored as decimal literals, so sharpness checks compare like for like."""
    p = check_param_int(p)
    at_zero = limit_at_zero(family, p)
    at_half_pi = limit_at_half_pi(family, p)
    if family.is_cos and p == 2:
        direction = Direction.INCREASING
        lower, upper = at_zero, at_half_pi
    else:
        direction = Direction.DECREASING
        lower, upper = at_half_pi, at_zero
    return EnvelopeConstants(family, p, lower, upper, direction)


def ratio_bounds(family: FamilyKind, p, x: float) -> tuple[float, float]:
    """Strict two-sided bounds on eval_ratio(family, p, x) for x in (0, pi/2).

    Rearranges lower < (A - ratio)/x^2 < upper with A = 1 (cos families)
    or A = p (sin families); the p = 2 reversal is already folded into the
    envelope constants, so lo < hi always holds."""
    ec = envelope_constants(family, p)
    if not 0.0 < x < HALF_PI:
        raise DomainError(f"x={x} outside (0, pi/2)")
    a = 1.0 if family.is_cos else float(ec.p)
    x2 = x * x
    return a - ec.upper * x2, a - ec.lower * x2
