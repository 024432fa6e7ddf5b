"""Lower-order terms of explicit-formula prime sums from moment models.

With even moments A_{2l}(p) = M_l (l >= 2) and vanishing odd moments, the
r >= 3 part of the prime sum collapses to

    -(2 phi_hat(0) / log R) * sum_p g_M(p/(p+1)^2) (p-1) log p / (p+1),

g_M(x) = sum_l M_l x^l. :func:`lower_order_sum` evaluates this compact form;
:func:`rewritten_sum` evaluates the same quantity term by term through the
prime weights p^(r/2)(p-1)/(p+1)^(r+1), and the two must agree.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from scipy import integrate

from .arithdata import FamilyData, empirical_moment, sieve_primes
from .errors import DomainError, NoData, ParseError
from .satake import _prime_weight_even, prime_weight


@dataclass(frozen=True)
class MomentModel:
    """Even moments M_2, ..., M_L; ``moments[0]`` is M_2."""

    moments: tuple[float, ...]

    def __post_init__(self):
        if not self.moments:
            raise ValueError("a moment model needs at least M_2")
        if not all(math.isfinite(m) for m in self.moments):
            raise ValueError("moments must be finite")

    @classmethod
    def from_sequence(cls, moments: Sequence[float]) -> MomentModel:
        return cls(tuple(moments))

    @property
    def L(self) -> int:
        return len(self.moments) + 1

    def moment(self, ell: int) -> float:
        if 2 <= ell <= self.L:
            return self.moments[ell - 2]
        return 0.0

    def abs_bound(self, x: float) -> float:
        """sum_l |M_l| x^(l-2); bounds |g_M(y)| / y^2 for 0 <= y <= x."""
        return math.fsum(abs(m) * x**i for i, m in enumerate(self.moments))


@dataclass(frozen=True)
class LowerOrderResult:
    value: float
    prime_cutoff: int
    log_R: float
    phi_hat_zero: float
    tail_estimate: float


def g_eval(model: MomentModel, x: float) -> float:
    """g_M(x) by Horner's scheme."""
    if not 0 <= x <= 0.25:
        raise DomainError(f"g_M is only evaluated on [0, 1/4], got {x}")
    acc = 0.0
    for m in reversed(model.moments):
        acc = acc * x + m
    return acc * x * x


def catalan(ell: int) -> int:
    return math.comb(2 * ell, ell) // (ell + 1)


def sato_tate_moment_quadrature(ell: int) -> float:
    """(2/pi) int_0^pi (2 cos t)^(2l) sin^2 t dt by adaptive quadrature."""
    val, _err = integrate.quad(
        lambda t: (2 * math.cos(t)) ** (2 * ell) * math.sin(t) ** 2,
        0.0,
        math.pi,
        epsabs=1e-13,
        epsrel=1e-13,
        limit=200,
    )
    return 2 / math.pi * val


def sato_tate_model(L: int) -> MomentModel:
    """Semicircle even moments M_l = Catalan(l) for l = 2..L."""
    if L < 2:
        raise ValueError("L must be >= 2")
    return MomentModel(tuple(float(catalan(ell)) for ell in range(2, L + 1)))


def load_moment_model(path: str | Path) -> MomentModel:
    """Two-column CSV ``ell,M`` with ell >= 2; gaps are filled with zeros."""
    values: dict[int, float] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [
            (i, row)
            for i, row in enumerate(csv.reader(fh), start=1)
            if row and not row[0].lstrip().startswith("#")
        ]
    if not rows:
        raise ParseError("empty moment file")
    if [c.strip().lower() for c in rows[0][1]] == ["ell", "m"]:
        rows = rows[1:]
    for lineno, row in rows:
        if len(row) != 2:
            raise ParseError(f"expected 2 fields, got {len(row)}", lineno)
        try:
            ell, m = int(row[0]), float(row[1])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if ell < 2:
            raise ParseError(f"ell must be >= 2, got {ell}", lineno)
        if ell in values:
            raise ParseError(f"duplicate ell={ell}", lineno)
        values[ell] = m
    if not values:
        raise ParseError("no moments in file")
    top = max(values)
    return MomentModel(tuple(values.get(ell, 0.0) for ell in range(2, top + 1)))


def _check_args(log_R: float, prime_cutoff: int) -> None:
    if not log_R > 0:
        raise ValueError("log_R must be positive")
    if prime_cutoff < 2:
        raise ValueError("prime_cutoff must be >= 2")


def tail_bound(model: MomentModel, prime_cutoff: int, log_R: float, phi_hat_zero: float) -> float:
    """Upper bound on |sum over p > cutoff| of the lower-order terms.

    For p > P, |g_M(p/(p+1)^2)| <= p^-2 * sum_l |M_l| P^(2-l) and
    (p-1)/(p+1) < 1, and sum_{n>P} log n / n^2 <= (log P + 1) / P.
    """
    P = float(prime_cutoff)
    prefactor = 2 * abs(phi_hat_zero) / log_R
    return prefactor * model.abs_bound(1 / P) * (math.log(P) + 1) / P


def lower_order_terms(model: MomentModel, primes: Sequence[int]) -> list[float]:
    """g_M(p/(p+1)^2) (p-1) log p / (p+1) for each prime, unscaled."""
    out = []
    for p in primes:
        x = p / (p + 1) ** 2
        out.append(g_eval(model, x) * (p - 1) * math.log(p) / (p + 1))
    return out


def lower_order_sum(
    model: MomentModel, log_R: float, phi_hat_zero: float, prime_cutoff: int
) -> LowerOrderResult:
    _check_args(log_R, prime_cutoff)
    terms = lower_order_terms(model, sieve_primes(prime_cutoff))
    # fsum keeps the result independent of how terms were produced
    value = -2 * phi_hat_zero / log_R * math.fsum(terms)
    return LowerOrderResult(
        value=value,
        prime_cutoff=prime_cutoff,
        log_R=log_R,
        phi_hat_zero=phi_hat_zero,
        tail_estimate=tail_bound(model, prime_cutoff, log_R, phi_hat_zero),
    )


def rewritten_sum(model: MomentModel, log_R: float, phi_hat_zero: float, prime_cutoff: int) -> float:
    """Same value as :func:`lower_order_sum`, before regrouping into g_M.

    Each prime contributes sum_l M_l p^l (p-1)/(p+1)^(2l+1) * log p, with
    the weight sum formed exactly and rounded once.
    """
    _check_args(log_R, prime_cutoff)
    exact_moments = [(2 * (i + 2), Fraction(m)) for i, m in enumerate(model.moments) if m]
    terms = []
    for p in sieve_primes(prime_cutoff):
        w = sum((m * _prime_weight_even(p, r) for r, m in exact_moments), Fraction(0))
        terms.append(float(w) * math.log(p))
    return -2 * phi_hat_zero / log_R * math.fsum(terms)


def empirical_lower_order(
    family: FamilyData, log_R: float, phi_hat_zero: float, r_max: int
) -> float:
    """The r = 3..r_max terms fed with the family's own moments A_r(p).

    Odd r is kept since data need not be symmetric; the -2 phi_hat(0)/log R
    normalisation matches :func:`lower_order_sum`.
    """
    if r_max < 3:
        raise ValueError("r_max must be >= 3")
    if not log_R > 0:
        raise ValueError("log_R must be positive")
    primes = family.primes()
    if not primes:
        raise NoData("family has no records")
    terms = []
    for p in primes:
        logp = math.log(p)
        for r in range(3, r_max + 1):
            terms.append(empirical_moment(family, r, p) * float(prime_weight(p, r)) * logp)
    return -2 * phi_hat_zero / log_R * math.fsum(terms)
