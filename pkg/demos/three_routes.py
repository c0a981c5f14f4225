"""Weighted q-Euler polynomials three ways, and what double precision costs."""
from fractions import Fraction

import mpmath
import numpy as np

from qeuler import euler_number, euler_poly_closed, euler_poly_series, euler_poly_umbral

# exact rationals at q = 1/2
half = Fraction(1, 2)
for n in range(5):
    print(n, euler_number(n, 1, half), euler_number(n, 2, half))

# the three routes at a single point
q, alpha, n, x = 0.3, 2, 4, 0.75
rep = euler_poly_series(n, x, alpha, q)
print("closed ", euler_poly_closed(n, x, alpha, q))
print("series ", rep.value, "terms", rep.terms_used, "tail <=", rep.tail_bound)
print("umbral ", euler_poly_umbral(n, x, alpha, q))

# closed form divides by (1-q^alpha)^n; near q = 1 floats lose digits
qs = np.array([0.5, 0.7, 0.9, 0.97, 0.99])
for qv in qs:
    with mpmath.workdps(40):
        ref = euler_poly_closed(8, mpmath.mpf("0.5"), 1, mpmath.mpf(qv))
    err = abs(euler_poly_closed(8, 0.5, 1, float(qv)) - float(ref))
    print(f"q={qv:.2f}  float error {err:.1e}")

# mpmath at 30 digits gets every route to agree
with mpmath.workdps(30):
    qm, xm = mpmath.mpf("0.9"), mpmath.mpf(2)
    a = euler_poly_closed(8, xm, 1, qm)
    b = euler_poly_series(8, xm, 1, qm, tol=mpmath.mpf(10) ** -20).value
    print("q=0.9 n=8 closed vs series:", mpmath.nstr(abs(a - b), 3))
