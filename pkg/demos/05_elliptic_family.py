"""
Coefficients of an elliptic-curve family
========================================

Compute lambda(p) = S(p)/sqrt(p) for a family of curves y^2 = x^3 + A x + B,
feed them through the CSV format, and compare empirical moments with the
Sato-Tate model.
"""

import io
import math

from polylogid.arithdata import EllipticCurve, elliptic_lambda, empirical_moment, load_family, sieve_primes
from polylogid.lowerorder import empirical_lower_order

# %%
curves = [EllipticCurve(a, b) for a in range(-6, 7) for b in range(-6, 7)]
curves = [c for c in curves if not c.is_singular()]
primes = [p for p in sieve_primes(60) if p > 2]

lines = ["form_id,p,lambda"]
for c in curves:
    for p in primes:
        if c.has_good_reduction(p):
            _, lam = elliptic_lambda(c, p)
            lines.append(f"E_{c.A}_{c.B},{p},{lam:.12f}")
family = load_family(io.StringIO("\n".join(lines) + "\n"))
print(len(family), "records over", len(family.primes()), "primes")

# %%
# Even moments at a few primes; Sato-Tate predicts 1, 2, 5
for p in (31, 53, 59):
    print(p, [round(empirical_moment(family, r, p), 3) for r in (2, 4, 6)])

# %%
print("empirical r>=3 sum:", empirical_lower_order(family, math.log(10**6), 1.0, 12))
