"""Chebyshev polynomials of the second kind and the envelope-derived bounds.

Run:  python demos/demo_chebyshev.py
"""

import math

import numpy as np

from trigratio import cheb_u, cheb_u_eval, corollary_bounds


def main():
    print("U_n in the monomial basis (exact integer coefficients):\n")
    for n in range(7):
        poly = cheb_u(n)
        terms = " + ".join(
            f"{c}x^{i}" for i, c in enumerate(poly.coeffs) if c != 0
        )
        print(f"  U_{n}(x) = {terms}")

    print("\nThe defining identity U_n(cos t) sin t = sin((n+1)t):")
    for n, t in [(3, 0.4), (6, 0.1), (15, 1.0)]:
        lhs = cheb_u_eval(n, math.cos(t)) * math.sin(t)
        rhs = math.sin((n + 1) * t)
        print(f"  n={n:2d}, t={t}: lhs={lhs:.15f}  rhs={rhs:.15f}")

    print("\nBecause sin(py)/sin y = U_{p-1}(cos y), the quadratic envelope of")
    print("the sin ratio family becomes a polynomial inequality.  For p = 7")
    print("on (0, pi/14):\n")
    for y in np.linspace(0.01, math.pi / 14.0 - 0.01, 6):
        lo, hi = corollary_bounds(7, float(y))
        val = cheb_u_eval(6, math.cos(float(y)))
        print(f"  y={y:.4f}: {lo:.6f} < U_6(cos y) = {val:.6f} < {hi:.6f}")

    print("\nAt y = 0.1 this gives the chain 6.44 < U_6(cos 0.1) < 6.502327:")
    lo, hi = corollary_bounds(7, 0.1)
    print(f"  {lo:.6f} < {cheb_u_eval(6, math.cos(0.1)):.6f} < {hi:.6f}")


if __name__ == "__main__":
    main()
