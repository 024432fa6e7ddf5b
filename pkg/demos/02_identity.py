"""
Collapsing combinations of polylogarithms
=========================================

The coefficients of prod_{j<l} (k^2 - j^2) combine Li_0 .. Li_{-2l} into a
single term (2l)!/2 * x^l (1+x)/(1-x)^(2l+1); an odd analogue uses
(2k+1) prod_{j<l} (k-j)(k+1+j). Both are checked here in exact arithmetic.
"""

from fractions import Fraction

from polylogid.identity import (
    a_coeffs,
    b_coeffs,
    c_const,
    combine_polylogs,
    proof_operator,
    rhs_closed,
    verify_identity,
)

# %%
# Even case l = 3: Li_{-6} - 5 Li_{-4} + 4 Li_{-2}
a3 = a_coeffs(3)
print("a_3:", a3.coeffs)
print("combination:", combine_polylogs(a3))
print("closed form:", rhs_closed(6))

# %%
# Odd case l = 2
b2 = b_coeffs(2)
print("b_2:", b2.coeffs)
print(combine_polylogs(b2) == rhs_closed(5))

# %%
# Verification report: exact rational-function equality and a direct
# comparison of the first 60 series coefficients.
for r in range(2, 12):
    rep = verify_identity(r, 60)
    print(r, rep.structural, rep.series)

# %%
# The induction step: (x d/dx)^2 - l^2 sends the level-l closed form to the
# level-(l+1) one, up to the ratio of normalising constants.
ell = 2
step = proof_operator(rhs_closed(2 * ell).scale(Fraction(1, c_const(2 * ell))), ell, "even")
print(step)
print(step == rhs_closed(2 * ell + 2).scale(Fraction((2 * ell + 2) * (2 * ell + 1), c_const(2 * ell + 2))))
