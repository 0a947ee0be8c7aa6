"""Closed forms and finite-difference oracles for D(x) = d^2/dx^2 (x^3 f'(x)).

The sign of D over (0, pi/2) is what drives every monotonicity claim about
the ratio families.  This module provides:

* `d_general` -- the closed form for the two trigonometric families, valid
  for any real p != 0.  Note: the printed source for the cos-family formula
  carries csc^4(x/p), but differentiating the definition gives sec^4(x/p);
  the sec^4 version agrees with the p = 2 factored display, with the
  parity sum forms and with the finite-difference oracle, so that is what
  is implemented here.
* `d_sum_even_sin`, `d_sum_odd` -- the finite-sum forms for integer p.
  For the cos family with p = 2k+1 the alternating factor is (-1)^(k-j);
  the (-1)^(j-1) variant agrees only for odd k and is numerically wrong
  for even k.
* `numeric_D` -- a nested central-difference oracle, evaluated internally
  in 80-bit extended precision so the h = 1e-4 tolerances are attainable.
* `dirichlet_sum`, `vanishing_limits_check` -- the auxiliary identities.

All evaluators accept numpy arrays for x.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .families import (
    DomainError,
    FamilyKind,
    ParameterError,
    PoleError,
    HALF_PI,
    check_param_real,
    eval_f_grid,
    f_series_coeffs,
)


class ParityError(ParameterError):
    """p does not have the parity the requested sum form needs."""


class DerivativeForm(enum.Enum):
    GENERAL_COS = "general-cos"
    GENERAL_SIN = "general-sin"
    SUM_EVEN_SIN = "sum-even-sin"
    SUM_ODD_COS = "sum-odd-cos"
    SUM_ODD_SIN = "sum-odd-sin"


def general_weights(family: FamilyKind, p: float) -> tuple[float, float, float, float]:
    """The four coefficients multiplying sin((1 -/+ 3/p)x), sin((1 -/+ 1/p)x)."""
    p3, p2 = p**3, p**2
    if family is FamilyKind.TRIG_COS:
        return (
            (p + 1) ** 3,
            (p - 1) ** 3,
            3 * p3 + 3 * p2 - 15 * p - 23,
            3 * p3 - 3 * p2 - 15 * p + 23,
        )
    if family is FamilyKind.TRIG_SIN:
        return (
            (p + 1) ** 3,
            -((p - 1) ** 3),
            -3 * p3 - 3 * p2 + 15 * p + 23,
            3 * p3 - 3 * p2 - 15 * p + 23,
        )
    raise ParameterError("closed form exists only for the trigonometric families")


def _check_x_open(x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if np.any(x <= 0.0) or np.any(x >= HALF_PI):
        raise DomainError("x must lie in (0, pi/2)")
    return x


def d_general(family: FamilyKind, p, x, *, weights=None):
    """Closed-form D(x) for TRIG_COS / TRIG_SIN, any real p != 0.

    Internally evaluated in 80-bit extended precision: the sin-family
    bracket vanishes like x^5 against csc^4(x/p), and the cancellation
    would otherwise cost ~1e-9 relative accuracy at small x for p ~ 12.

    `weights` overrides the four bracket coefficients (test hook)."""
    p = check_param_real(p)
    x = _check_x_open(x)
    xl = x.astype(np.longdouble)
    s = np.longdouble(1.0) / np.longdouble(p)
    if weights is None:
        weights = general_weights(family, p)
    w1, w2, w3, w4 = (np.longdouble(w) for w in weights)
    one = np.longdouble(1.0)
    three = np.longdouble(3.0)
    bracket = (
        w1 * np.sin(xl * (one - three * s))
        + w2 * np.sin(xl * (one + three * s))
        + w3 * np.sin(xl * (one - s))
        + w4 * np.sin(xl * (one + s))
    )
    pre = xl / (np.longdouble(8.0) * np.longdouble(p) ** 3)
    if family is FamilyKind.TRIG_COS:
        den = np.cos(s * xl)
        if np.any(np.abs(den) < 1e-12):
            raise PoleError(f"cos(x/p) vanishes for p={p}")
        out = (-pre * bracket / den**4).astype(np.float64)
    else:
        den = np.sin(s * xl)
        if np.any(np.abs(den) < 1e-300):
            raise PoleError(f"sin(x/p) vanishes for p={p}")
        out = (pre * bracket / den**4).astype(np.float64)
    return out if out.ndim else float(out)


def d_sum_even_sin(k: int, x):
    """Sum form of D for the sin family with p = 2k; every term is <= 0."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    x = _check_x_open(x)
    acc = 0.0
    for j in range(k):
        m = 2 * j + 1
        acc = acc + m**3 * np.sin(m * x / (2.0 * k))
    out = -x / (4.0 * k**3) * acc
    return out if out.ndim else float(out)


def d_sum_odd(family: FamilyKind, k: int, x):
    """Sum form of D for p = 2k+1; plain for sin, alternating for cos."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if family not in (FamilyKind.TRIG_COS, FamilyKind.TRIG_SIN):
        raise ParameterError("sum forms exist only for the trigonometric families")
    x = _check_x_open(x)
    p = 2 * k + 1
    acc = 0.0
    for j in range(1, k + 1):
        sgn = (-1) ** (k - j) if family is FamilyKind.TRIG_COS else 1
        acc = acc + sgn * j**3 * np.sin(2.0 * j * x / p)
    out = -16.0 * x / p**3 * acc
    return out if out.ndim else float(out)


def d_sum(family: FamilyKind, p: int, x):
    """Parity-dispatched sum form of D; raises ParityError on a mismatch."""
    if family is FamilyKind.TRIG_SIN:
        if p % 2 == 0:
            return d_sum_even_sin(p // 2, x)
        return d_sum_odd(family, (p - 1) // 2, x)
    if family is FamilyKind.TRIG_COS:
        if p % 2 == 0:
            raise ParityError("no printed sum form for the cos family with even p")
        return d_sum_odd(family, (p - 1) // 2, x)
    raise ParameterError("sum forms exist only for the trigonometric families")


def dirichlet_sum(k: int, x: float) -> tuple[float, float]:
    """Sum of cos((2j+1)x/(2k)) term by term and via sin x / (2 sin(x/(2k)))."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not 0.0 < x < math.pi:
        raise DomainError(f"x={x} outside (0, pi)")
    den = math.sin(x / (2.0 * k))
    if abs(den) < 1e-300:
        raise PoleError(f"sin(x/(2k)) vanishes at x={x}, k={k}")
    term_sum = math.fsum(math.cos((2 * j + 1) * x / (2.0 * k)) for j in range(k))
    closed = math.sin(x) / (2.0 * den)
    return term_sum, closed


# --- finite-difference oracle ----------------------------------------------

_LD = np.longdouble
_EPS_LD = float(np.finfo(np.longdouble).eps)


def _numeric_D_arrays(family: FamilyKind, p: float, x: np.ndarray, h: np.ndarray):
    """Richardson-extrapolated nested differences; returns (value, error_est).

    g(t) = t^3 f'(t) with f' a 5-point central difference at a fixed inner
    step delta (0.01, shrunk near the interval ends); D is the 5-point
    second difference of g at the outer step h, Richardson-paired with h/2.
    Keeping delta independent of h matters: the outer stencil amplifies
    inner noise by ~1/h^2, so an h-coupled inner step drowns at h = 1e-4
    even in the 80-bit arithmetic used here.  The error estimate combines
    the two observable truncation differences with a roundoff model.
    """
    x = np.asarray(x, dtype=_LD)
    h = np.broadcast_to(np.asarray(h, dtype=_LD), x.shape)
    room = np.minimum(x - 2 * h, HALF_PI - x - 2 * h)
    delta = np.minimum(_LD(0.01), 0.45 * room)

    def f(t):
        return eval_f_grid(family, p, t, dtype=np.longdouble)

    max_f = np.zeros_like(x)

    def g(t, d):
        f1, f2 = f(t + d), f(t + 2 * d)
        f3, f4 = f(t - d), f(t - 2 * d)
        np.maximum(max_f, np.abs(f1), out=max_f)
        np.maximum(max_f, np.abs(f3), out=max_f)
        deriv = (-f2 + 8.0 * f1 - 8.0 * f3 + f4) / (12.0 * d)
        return t**3 * deriv

    def second_diff(hh, d):
        return (
            -g(x - 2 * hh, d)
            + 16.0 * g(x - hh, d)
            - 30.0 * g(x, d)
            + 16.0 * g(x + hh, d)
            - g(x + 2 * hh, d)
        ) / (12.0 * hh * hh)

    d1 = second_diff(h, delta)
    d2 = second_diff(h / 2.0, delta)
    d3 = second_diff(h, delta / 2.0)
    value = (16.0 * d2 - d1) / 15.0
    outer_trunc = np.abs(d2 - d1) / 15.0
    inner_trunc = np.abs(d1 - d3) * (16.0 / 15.0)
    x_hi = x + 2 * h
    roundoff = 64.0 * x_hi**3 * _EPS_LD * max_f / (delta * h * h)
    est = (
        2.0 * (outer_trunc + inner_trunc)
        + roundoff
        + 4.0 * np.finfo(np.float64).eps * np.abs(value)
    )
    return value.astype(np.float64), est.astype(np.float64)


def numeric_D(family: FamilyKind, p, x: float, h: float = 1e-4) -> float:
    """Finite-difference estimate of D(x) at outer step h (Richardson-paired with h/2)."""
    p = check_param_real(p)
    if not 1e-5 <= h <= 1e-3:
        raise DomainError(f"h={h} outside [1e-5, 1e-3]")
    if x - 2.5 * h <= 0.0 or x + 2.5 * h >= HALF_PI:
        raise DomainError(f"stencil around x={x} with h={h} leaves (0, pi/2)")
    value, _ = _numeric_D_arrays(family, p, np.asarray([x]), np.asarray([h]))
    return float(value[0])


def numeric_D_with_estimate(family: FamilyKind, p, x, h):
    """Vectorized numeric_D returning (value, error_estimate) arrays."""
    p = check_param_real(p)
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    h = np.broadcast_to(np.asarray(h, dtype=np.float64), x.shape)
    if np.any(x - 2.5 * h <= 0.0) or np.any(x + 2.5 * h >= HALF_PI):
        raise DomainError("stencil leaves (0, pi/2)")
    return _numeric_D_arrays(family, p, x, h)


def vanishing_limits_check(family: FamilyKind, p) -> tuple[float, float]:
    """Extrapolated x -> 0 limits of d/dx(x^3 f') and of x^3 f' themselves.

    Both are evaluated from the series branch at x = 1e-2, 1e-3, 1e-4 and
    Richardson-extrapolated with their known leading orders (x^3 and x^4)."""
    p = check_param_real(p)
    a = f_series_coeffs(family, p)

    def l2(x):  # x^3 f'(x) = sum 2i * a_i * x^(2i+2)
        return math.fsum(2 * i * a[i] * x ** (2 * i + 2) for i in range(1, len(a)))

    def l1(x):  # d/dx (x^3 f')
        return math.fsum(2 * i * (2 * i + 2) * a[i] * x ** (2 * i + 1) for i in range(1, len(a)))

    xs = (1e-2, 1e-3, 1e-4)

    def extrapolate(fn, order):
        v = [fn(x) for x in xs]
        scale = 10.0**order
        # eliminate the leading x^order term between successive points
        v01 = (scale * v[1] - v[0]) / (scale - 1.0)
        v12 = (scale * v[2] - v[1]) / (scale - 1.0)
        return (scale * 100.0 * v12 - v01) / (scale * 100.0 - 1.0)

    return extrapolate(l1, 3), extrapolate(l2, 4)
