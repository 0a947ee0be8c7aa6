"""Numerical certification campaigns for the envelope and sign claims.

GRID mode samples the interior of (0, pi/2) and reports the worst margin;
RIGOROUS mode (trigonometric families only) evaluates the closed forms of
D(x) in outward-rounded interval arithmetic over adaptively bisected
subintervals, so a CERTIFIED verdict is a machine-checked sign proof up to
the soundness of the interval primitives.

Near x -> 0 the sin-family general closed form is numerically treacherous
(csc^4(x/p) against a bracket that vanishes like x^5), so sign evaluation
dispatches to the parity sum forms for the sin family and to the sec^4
general form for the cos family; both are benign on the whole interior.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import cheb_u_eval
from .derivatives import (
    d_general,
    d_sum,
    d_sum_even_sin,
    d_sum_odd,
    dirichlet_sum,
    general_weights,
    numeric_D_with_estimate,
    vanishing_limits_check,
)
from .envelopes import Direction, EnvelopeConstants, envelope_constants
from .families import FamilyKind, HALF_PI, ParameterError, check_param_int, eval_f_grid
from .interval import Interval


class Mode(enum.Enum):
    GRID = "grid"
    RIGOROUS = "rigorous"


class Sign(enum.Enum):
    POS = 1
    NEG = -1


class Status(enum.Enum):
    CERTIFIED = "certified"
    FALSIFIED = "falsified"
    INCONCLUSIVE = "inconclusive"


class ModeError(ValueError):
    """Requested mode is unavailable for the claim."""


@dataclass(frozen=True)
class VerificationConfig:
    grid_points: int = 2048
    interior_margin: float = 1e-3
    mode: Mode = Mode.GRID
    max_subdivisions: int = 20

    def __post_init__(self):
        if self.grid_points < 16:
            raise ParameterError("grid_points must be >= 16")
        if not 0.0 < self.interior_margin < math.pi / 8.0:
            raise ParameterError("interior_margin must lie in (0, pi/8)")


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    status: Status
    min_margin: float
    worst_x: float
    cells_checked: int
    mode: Mode


def _grid(cfg: VerificationConfig) -> np.ndarray:
    return np.linspace(cfg.interior_margin, HALF_PI - cfg.interior_margin, cfg.grid_points)


def expected_sign_D(family: FamilyKind, p: int) -> Sign:
    """Sign D(x) would need on (0, pi/2) for the single-sign monotonicity route.

    Positive only for the cos families at p = 2.  Caveat: for HYP_COS with
    p = 2 the positive sign holds only on roughly (0, 1.357); D turns
    negative near pi/2, so verify_sign_D correctly falsifies that claim even
    though f itself is increasing there (verify_monotonicity certifies it
    directly)."""
    return Sign.POS if family.is_cos and p == 2 else Sign.NEG


# --- rigorous interval evaluation of D --------------------------------------


def _interval_sin_comb(x: Interval, terms, scale: Interval) -> Interval:
    """scale * sum_i w_i * sin(c_i * x), all outward rounded."""
    acc = Interval(0.0, 0.0)
    for w, c in terms:
        acc = acc + (x * c).sin() * w
    return scale * acc


def _interval_D(family: FamilyKind, p: int, x: Interval) -> Interval:
    if family is FamilyKind.TRIG_SIN:
        if p % 2 == 0:
            k = p // 2
            terms = [((2 * j + 1) ** 3, (2 * j + 1) / (2.0 * k)) for j in range(k)]
            scale = -x * (1.0 / (4.0 * k**3))
        else:
            k = (p - 1) // 2
            terms = [(j**3, 2.0 * j / p) for j in range(1, k + 1)]
            scale = -x * (16.0 / p**3)
        return _interval_sin_comb(x, terms, scale)
    if family is FamilyKind.TRIG_COS:
        if p % 2 == 1:
            k = (p - 1) // 2
            terms = [((-1) ** (k - j) * j**3, 2.0 * j / p) for j in range(1, k + 1)]
            scale = -x * (16.0 / p**3)
            return _interval_sin_comb(x, terms, scale)
        w = general_weights(family, float(p))
        s = 1.0 / p
        terms = list(zip(w, (1.0 - 3.0 * s, 1.0 + 3.0 * s, 1.0 - s, 1.0 + s)))
        sec4 = (x * s).cos().reciprocal() ** 4
        scale = -x * sec4 * (1.0 / (8.0 * p**3))
        return _interval_sin_comb(x, terms, scale)
    raise ModeError("rigorous evaluation exists only for the trigonometric families")


def _verify_sign_rigorous(family, p, expected_sign, cfg) -> VerificationReport:
    claim = f"sign-D:{family.value}:p={p}:{expected_sign.name}"
    root = Interval(cfg.interior_margin, HALF_PI - cfg.interior_margin)
    stack = [(root, 0)]
    cells = 0
    min_margin = math.inf
    status = Status.CERTIFIED
    worst_x = math.nan
    while stack:
        cell, depth = stack.pop()
        enc = _interval_D(family, p, cell)
        if expected_sign is Sign.NEG:
            enc = -enc
        if enc.strictly_positive:
            cells += 1
            if enc.lo < min_margin:
                min_margin = enc.lo
                if math.isnan(worst_x) or status is Status.CERTIFIED:
                    worst_x = cell.mid
            continue
        if enc.strictly_negative:
            # the whole enclosure is on the wrong side: a real counterexample
            return VerificationReport(claim, Status.FALSIFIED, enc.hi, cell.mid, cells + 1, Mode.RIGOROUS)
        if depth >= cfg.max_subdivisions:
            status = Status.INCONCLUSIVE
            min_margin = min(min_margin, enc.lo)
            worst_x = cell.mid
            cells += 1
            continue
        left, right = cell.split()
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    if not math.isfinite(min_margin):
        min_margin = math.nan
    return VerificationReport(claim, status, min_margin, worst_x, cells, Mode.RIGOROUS)


def verify_sign_D(
    family: FamilyKind, p, expected_sign: Sign, cfg: VerificationConfig
) -> VerificationReport:
    """Certify that D(x) keeps `expected_sign` on the interior of (0, pi/2)."""
    p = check_param_int(p)
    if cfg.mode is Mode.RIGOROUS:
        if not family.is_trig:
            raise ModeError("no closed form for hyperbolic families; use GRID mode")
        return _verify_sign_rigorous(family, p, expected_sign, cfg)

    claim = f"sign-D:{family.value}:p={p}:{expected_sign.name}"
    xs = _grid(cfg)
    s = float(expected_sign.value)
    if family.is_trig:
        if family is FamilyKind.TRIG_SIN:
            values = d_sum(family, p, xs)
        elif p % 2 == 1:
            values = d_sum(family, p, xs)
        else:
            values = d_general(family, p, xs)
        margins = s * values
        worst = int(np.argmin(margins))
        status = Status.CERTIFIED if margins[worst] > 0.0 else Status.FALSIFIED
        return VerificationReport(claim, status, float(margins[worst]), float(xs[worst]), len(xs), Mode.GRID)

    h = min(1e-4, cfg.interior_margin / 4.0)
    if h < 1e-5:
        raise ParameterError("interior_margin too small for the difference stencil")
    values, est = numeric_D_with_estimate(family, p, xs, h)
    signed = s * values
    worst = int(np.argmin(signed))
    if signed[worst] <= 0.0:
        return VerificationReport(claim, Status.FALSIFIED, float(signed[worst]), float(xs[worst]), len(xs), Mode.GRID)
    guarded = signed - 10.0 * est
    gworst = int(np.argmin(guarded))
    if guarded[gworst] <= 0.0:
        # sign agrees everywhere but is not resolvable above the noise model
        return VerificationReport(claim, Status.INCONCLUSIVE, float(signed[worst]), float(xs[gworst]), len(xs), Mode.GRID)
    return VerificationReport(claim, Status.CERTIFIED, float(signed[worst]), float(xs[worst]), len(xs), Mode.GRID)


def verify_monotonicity(family: FamilyKind, p, cfg: VerificationConfig) -> VerificationReport:
    """Strict ordering of f over consecutive grid points, per the envelope direction."""
    p = check_param_int(p)
    claim = f"monotone:{family.value}:p={p}"
    ec = envelope_constants(family, p)
    xs = _grid(cfg)
    fs = eval_f_grid(family, p, xs)
    diffs = np.diff(fs)
    if ec.direction is Direction.DECREASING:
        diffs = -diffs
    worst = int(np.argmin(diffs))
    status = Status.CERTIFIED if diffs[worst] > 0.0 else Status.FALSIFIED
    return VerificationReport(claim, status, float(diffs[worst]), float(xs[worst]), len(xs) - 1, cfg.mode)


def verify_envelope(
    family: FamilyKind,
    p,
    cfg: VerificationConfig,
    constants: EnvelopeConstants | None = None,
) -> VerificationReport:
    """Strict containment lower < f(x) < upper at every interior grid point.

    `constants` overrides the computed envelope (test hook)."""
    p = check_param_int(p)
    claim = f"envelope:{family.value}:p={p}"
    ec = constants if constants is not None else envelope_constants(family, p)
    xs = _grid(cfg)
    fs = eval_f_grid(family, p, xs)
    margins = np.minimum(fs - ec.lower, ec.upper - fs)
    worst = int(np.argmin(margins))
    status = Status.CERTIFIED if margins[worst] > 0.0 else Status.FALSIFIED
    return VerificationReport(claim, status, float(margins[worst]), float(xs[worst]), len(xs), cfg.mode)


# --- identity suite ---------------------------------------------------------


def _cheb_nodes(n: int, lo: float, hi: float) -> np.ndarray:
    k = np.arange(n)
    t = np.cos((2 * k + 1) * math.pi / (2 * n))
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * t


def _tolerance_report(claim, errors, xs, tol, cfg, n_checked=None) -> VerificationReport:
    errors = np.asarray(errors)
    worst = int(np.argmax(errors))
    margin = tol - float(errors[worst])
    status = Status.CERTIFIED if margin > 0.0 else Status.FALSIFIED
    return VerificationReport(
        claim, status, margin, float(xs[worst]), n_checked or errors.size, cfg.mode
    )


def verify_identities(cfg: VerificationConfig, d_general_fn=d_general) -> list[VerificationReport]:
    """Cross-check every closed-form identity against its independent partner.

    `d_general_fn` substitutes the general-form evaluator (mutation hook)."""
    reports = []
    xs = _cheb_nodes(40, 0.05, HALF_PI - 0.05)

    # general vs even-parity sum, sin family
    errs, pts = [], []
    for k in range(1, 7):
        a = d_general_fn(FamilyKind.TRIG_SIN, 2 * k, xs)
        b = d_sum_even_sin(k, xs)
        errs.append(np.abs(a - b) / np.maximum(1.0, np.abs(b)))
        pts.append(xs)
    reports.append(
        _tolerance_report("identity:general-vs-even-sum", np.concatenate(errs), np.concatenate(pts), 1e-12, cfg)
    )

    # general vs odd-parity sums, both trig families
    errs, pts = [], []
    for k in range(1, 7):
        for family in (FamilyKind.TRIG_COS, FamilyKind.TRIG_SIN):
            a = d_general_fn(family, 2 * k + 1, xs)
            b = d_sum_odd(family, k, xs)
            errs.append(np.abs(a - b) / np.maximum(1.0, np.abs(b)))
            pts.append(xs)
    reports.append(
        _tolerance_report("identity:general-vs-odd-sum", np.concatenate(errs), np.concatenate(pts), 1e-12, cfg)
    )

    # Dirichlet-style sum of cosines vs its closed form
    errs, pts = [], []
    grid = np.linspace(cfg.interior_margin, math.pi - cfg.interior_margin, 100)
    for k in range(1, 11):
        for x in grid:
            term_sum, closed = dirichlet_sum(k, float(x))
            errs.append(abs(term_sum - closed) / max(1.0, abs(closed)))
            pts.append(x)
    reports.append(_tolerance_report("identity:dirichlet-sum", errs, pts, 1e-13, cfg))

    # vanishing limits of x^3 f' and its derivative
    errs, pts = [], []
    for family in FamilyKind:
        for p in range(2, 9):
            l1, l2 = vanishing_limits_check(family, p)
            errs.extend([abs(l1), abs(l2)])
            pts.extend([0.0, 0.0])
    reports.append(_tolerance_report("identity:vanishing-limits", errs, pts, 1e-8, cfg))

    # U_n(cos t) * sin t = sin((n+1) t)
    errs, pts = [], []
    thetas = np.linspace(0.01, math.pi - 0.01, 100)
    for n in range(0, 31):
        for t in thetas:
            err = abs(cheb_u_eval(n, math.cos(t)) * math.sin(t) - math.sin((n + 1) * t))
            errs.append(err)
            pts.append(t)
    reports.append(_tolerance_report("identity:chebyshev-trig", errs, pts, 1e-11, cfg))

    return reports
