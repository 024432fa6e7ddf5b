"""
Negative-order polylogarithms and Eulerian numbers
==================================================

Li_{-r}(x) = sum_k k^r x^k is a rational function whose numerator carries
the Eulerian numbers. We print the first few closed forms, then check them
against the defining series and against a permutation count.
"""

from polylogid.eulerian import eulerian_bruteforce, eulerian_row, polylog_closed, polylog_series
from polylogid.exactmath import rf_series

# %%
# Closed forms for r = 0..7
for r in range(8):
    print(f"Li_{{-{r}}}(x) = {polylog_closed(r)}")

# %%
# The numerator of Li_{-r} is the r-th row of Eulerian numbers. For small r
# we can count permutations of {1..r} by number of ascents directly.
r = 6
row = eulerian_row(r).values
print("E(6, j):", row)
print("by enumeration:", tuple(eulerian_bruteforce(r, j) for j in range(r + 1)))

# %%
# Expanding the closed form at x = 0 recovers k^r exactly.
N = 10
print(rf_series(polylog_closed(r), N).coeffs == polylog_series(r, N).coeffs)
