"""Quadratic envelopes: sharp constants, monotonicity, and ratio bounds.

Run:  python demos/demo_envelopes.py
"""

import numpy as np

from trigratio import (
    FamilyKind,
    envelope_constants,
    eval_f,
    eval_ratio,
    ratio_bounds,
)
from trigratio.families import HALF_PI


def main():
    print("Envelope constants (infimum/supremum of f on (0, pi/2)):\n")
    for family in FamilyKind:
        for p in (2, 3, 7):
            ec = envelope_constants(family, p)
            print(
                f"  {family.value:8s} p={p}: "
                f"{ec.lower:+.9f} < f < {ec.upper:+.9f}  ({ec.direction.value})"
            )
        print()

    print("Note the direction reversal: only the two cos-type families at")
    print("p = 2 are increasing; everything else decreases.\n")

    print("Containment margins for trig-sin, p = 7, on a coarse grid:")
    ec = envelope_constants(FamilyKind.TRIG_SIN, 7)
    for x in np.linspace(0.05, HALF_PI - 0.05, 8):
        f = eval_f(FamilyKind.TRIG_SIN, 7, float(x))
        print(
            f"  x={x:.3f}  f={f:.6f}  "
            f"margin_lower={f - ec.lower:.2e}  margin_upper={ec.upper - f:.2e}"
        )

    print("\nRearranged as two-sided bounds on the bare ratio sin x / sin(x/p):")
    for x in (0.3, 0.9, 1.5):
        lo, hi = ratio_bounds(FamilyKind.TRIG_SIN, 7, x)
        r = eval_ratio(FamilyKind.TRIG_SIN, 7, x)
        print(f"  x={x:.1f}: {lo:.6f} < {r:.6f} < {hi:.6f}  (width {hi - lo:.2e})")
    print("\nThe bounds pinch quadratically as x -> 0: width = (upper-lower) x^2.")


if __name__ == "__main__":
    main()
