"""Chebyshev polynomials of the second kind and the ratio-derived bounds.

U_n satisfies U_n(cos t) = sin((n+1)t)/sin t, which identifies the sin
ratio family at integer p with U_{p-1}: sin(p y)/sin y = U_{p-1}(cos y).
`corollary_bounds` transports the quadratic envelope of that ratio into a
polynomial inequality on (0, pi/(2p)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .envelopes import ratio_bounds
from .families import DomainError, FamilyKind, ParameterError, check_param_int

DEGREE_CAP = 64


class DegreeCapError(ParameterError):
    """Coefficients above the cap overflow double precision."""


@dataclass(frozen=True)
class ChebPoly:
    """Monomial coefficients of U_n; coeffs[i] multiplies x^i, all exact ints."""

    degree: int
    coeffs: tuple[int, ...]


def cheb_u(n: int) -> ChebPoly:
    """U_n by the three-term recurrence U_{n+1} = 2x U_n - U_{n-1}, exactly."""
    if n < 0:
        raise ParameterError(f"degree must be >= 0, got {n}")
    if n > DEGREE_CAP:
        raise DegreeCapError(f"degree {n} above cap {DEGREE_CAP}")
    prev = [1]
    if n == 0:
        return ChebPoly(0, (1,))
    cur = [0, 2]
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return ChebPoly(n, tuple(cur))


def cheb_u_eval(n: int, t: float) -> float:
    """U_n(t) for |t| <= 1 by the value-space recurrence (numerically stable)."""
    if n < 0:
        raise ParameterError(f"degree must be >= 0, got {n}")
    if not -1.0 <= t <= 1.0:
        raise DomainError(f"t={t} outside [-1, 1]")
    u_prev, u_cur = 1.0, 2.0 * t
    if n == 0:
        return u_prev
    for _ in range(n - 1):
        u_prev, u_cur = u_cur, 2.0 * t * u_cur - u_prev
    return u_cur


def horner_eval(poly: ChebPoly, t: float) -> float:
    acc = 0.0
    for c in reversed(poly.coeffs):
        acc = acc * t + c
    return acc


def corollary_bounds(p, y: float) -> tuple[float, float]:
    """Strict bounds lo < U_{p-1}(cos y) < hi for y in (0, pi/(2p)).

    Delegates to ratio_bounds at x = p*y so the two share one arithmetic
    path (the corollary is exactly that substitution)."""
    p = check_param_int(p)
    if not 0.0 < y < math.pi / (2.0 * p):
        raise DomainError(f"y={y} outside (0, pi/(2p)) for p={p}")
    return ratio_bounds(FamilyKind.TRIG_SIN, p, p * y)
