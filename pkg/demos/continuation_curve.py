"""The real-s interpolation of E~_{n,q}(w) over 1 <= s <= 2, written as CSV."""
import sys

import numpy as np

from qeuler.emit import to_csv
from qeuler.euler import euler_poly_closed
from qeuler.zeta import continuation_poly, curve_sample, large_n_residual

grid = curve_sample(1.0, 2.0, -0.5, 0.5, 41, 41, 1, 0.5)
vals = np.array([v for _, _, v in grid]).reshape(41, 41)
print("range", vals.min(), vals.max(), "finite", np.isfinite(vals).all())

# integer s hits the polynomials
for n in (1, 2):
    print(n, continuation_poly(n, 0.25), euler_poly_closed(n, 0.25, 1, 0.5))

out = sys.argv[1] if len(sys.argv) > 1 else "curve.csv"
with open(out, "w") as fh:
    fh.write(to_csv(grid))
print("wrote", out)

# the large-n limit is approached at rate [2:q^alpha]^-n, slow for alpha = 2
for alpha in (1, 2):
    print(alpha, [f"{large_n_residual(n, alpha, 0.3):.1e}" for n in (10, 20, 40, 80)])
