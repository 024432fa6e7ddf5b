"""
Power sums of Satake parameters as polynomials in lambda
========================================================

If alpha + beta = lambda and alpha beta = 1 then alpha^m + beta^m is a
polynomial in lambda with integer coefficients c_{m,r}.
"""

import numpy as np

from polylogid.satake import CoefficientTable, eval_satake_poly, satake_power_oracle

# %%
table = CoefficientTable.build(8)
for m in range(1, 9):
    terms = [f"{c:+d} l^{r}" for mm, r, c in table.nonzero() if mm == m]
    print(f"alpha^{m} + beta^{m} =", " ".join(terms))

# %%
# Compare against the complex roots of z^2 - lambda z + 1 on a grid.
lams = np.linspace(-2, 2, 9)
for m in (5, 12, 20):
    err = max(abs(eval_satake_poly(float(l), m) - satake_power_oracle(float(l), m)) for l in lams)
    print(f"m={m}: max deviation {err:.1e}")
