"""
Lower-order terms from a moment model
=====================================

With Sato-Tate moments (Catalan numbers) the r >= 3 part of the prime sum
is -(2 phi_hat(0)/log R) sum_p g_M(p/(p+1)^2) (p-1) log p/(p+1). We evaluate
it, compare with the unregrouped sum, and watch it converge in the cutoff.
"""

from polylogid.lowerorder import (
    catalan,
    lower_order_sum,
    rewritten_sum,
    sato_tate_model,
    sato_tate_moment_quadrature,
)

# %%
# The moments, from quadrature against the semicircle
for ell in range(2, 7):
    print(ell, sato_tate_moment_quadrature(ell), catalan(ell))

# %%
model = sato_tate_model(20)
for cutoff in (10**2, 10**3, 10**4, 10**5, 10**6):
    res = lower_order_sum(model, log_R=1.0, phi_hat_zero=1.0, prime_cutoff=cutoff)
    print(f"P={cutoff:>8}: value={res.value:.10f}  tail<={res.tail_estimate:.2e}")

# %%
# Same value summed term by term through the prime weights
print(rewritten_sum(model, 1.0, 1.0, 10**4), lower_order_sum(model, 1.0, 1.0, 10**4).value)
