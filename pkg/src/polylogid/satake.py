"""The coefficients c_{m,r} with alpha^m + beta^m = sum_r c_{m,r} lambda^r.

Here alpha + beta = lambda and alpha * beta = 1 (a good prime of a GL(2)
form). The table is exact; two floating-point oracles (complex roots and
Chebyshev polynomials) exist only for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from numpy.polynomial import chebyshev

from .errors import DomainError, NotPrime
from .exactmath import Polynomial
from .identity import c_const


def c_mr(m: int, r: int) -> int:
    if m < 0 or r < 0:
        raise ValueError("m and r must be non-negative")
    if (m - r) % 2 or m < r:
        return 0
    if r == 0:
        # c_{0,0} = 0 by definition even though alpha^0 + beta^0 = 2
        return 0 if m == 0 else (-1) ** (m // 2) * 2
    if r % 2 == 0:
        k, ell = m // 2, r // 2
        num = (-1) ** (k + ell) * k * factorial(k + ell - 1)
        den = c_const(r) * factorial(k - ell)
    else:
        k, ell = (m - 1) // 2, (r - 1) // 2
        num = (-1) ** (k + ell) * (2 * k + 1) * factorial(k + ell)
        den = c_const(r) * factorial(k - ell)
    q, rem = divmod(num, den)
    if rem:
        # only reachable when c_const has been deliberately corrupted
        return Fraction(num, den)
    return q


@dataclass(frozen=True)
class CoefficientTable:
    max_m: int
    entries: dict[tuple[int, int], int] = field(repr=False)

    @classmethod
    def build(cls, max_m: int) -> CoefficientTable:
        if max_m < 1:
            raise ValueError("max_m must be positive")
        entries = {(m, r): c_mr(m, r) for m in range(max_m + 1) for r in range(m + 1)}
        return cls(max_m, entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        m, r = key
        return self.entries.get((m, r), 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        """(m, r, c) for every nonzero entry, m ascending, r descending."""
        return [
            (m, r, self.entries[(m, r)])
            for m in range(self.max_m + 1)
            for r in range(m, -1, -1)
            if self.entries[(m, r)]
        ]


def satake_poly(m: int) -> list[tuple[int, int]]:
    """Nonzero (r, c_{m,r}) pairs, r descending."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return [(r, c) for r in range(m, -1, -1) if (c := c_mr(m, r))]


def satake_polynomial(m: int) -> Polynomial:
    """alpha^m + beta^m as an exact polynomial in lambda."""
    coeffs = [0] * (m + 1)
    for r, c in satake_poly(m):
        coeffs[r] = c
    return Polynomial(coeffs)


def eval_satake_poly(lam: float, m: int) -> float:
    """sum_r c_{m,r} lam^r, evaluated exactly at the binary value of lam and rounded once."""
    return float(satake_polynomial(m)(Fraction(lam)))


@dataclass(frozen=True)
class SatakePair:
    alpha: complex
    beta: complex
    lam: float

    @classmethod
    def from_lambda(cls, lam: float) -> SatakePair:
        if abs(lam) > 2:
            raise DomainError(f"|lambda| = {abs(lam)} > 2: parameters are not unitary")
        alpha = (lam + 1j * math.sqrt(max(0.0, 4.0 - lam * lam))) / 2
        # unit modulus, so 1/alpha is the conjugate
        return cls(alpha, alpha.conjugate(), lam)

    def power_sum(self, m: int) -> complex:
        return self.alpha**m + self.beta**m


def satake_power_oracle(lam: float, m: int) -> float:
    """Re(alpha^m + beta^m) computed from the roots of z^2 - lambda z + 1."""
    s = SatakePair.from_lambda(lam).power_sum(m)
    if abs(s.imag) >= 1e-10:
        raise ArithmeticError(f"power sum has imaginary part {s.imag}")
    return s.real


def chebyshev_oracle(lam: float, m: int) -> float:
    """2 T_m(lambda / 2)."""
    if abs(lam) > 2:
        raise DomainError(f"|lambda| = {abs(lam)} > 2")
    return 2.0 * float(chebyshev.chebval(lam / 2, [0] * m + [1]))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_weight_even(p: int, r: int) -> Fraction:
    return Fraction(p ** (r // 2) * (p - 1), (p + 1) ** (r + 1))


def prime_weight(p: int, r: int) -> Fraction | float:
    """p^(r/2) (p-1) / (p+1)^(r+1); exact when r is even."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r % 2 == 0:
        return _prime_weight_even(p, r)
    return math.sqrt(p) * float(_prime_weight_even(p, r - 1)) / (p + 1)
