"""Linear combinations of Li_{-i} that collapse to x^l (1+x) / (1-x)^n.

For l >= 1 let a_{l,i} be the coefficients of prod_{j<l} (k^2 - j^2) and
b_{l,i} those of (2k+1) prod_{j<l} (k-j)(k+1+j). Then

    sum_i a_{l,i} Li_{-i}(x) = (2l)!/2 * x^l (1+x) / (1-x)^(2l+1)
    sum_i b_{l,i} Li_{-i}(x) = (2l+1)! * x^l (1+x) / (1-x)^(2l+2)

This module builds both sides exactly and checks them two ways.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Literal

from .errors import InvalidIndex
from .eulerian import polylog_closed, polylog_series
from .exactmath import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    euler_derivative,
    rf_series,
)

Parity = Literal["even", "odd"]

# test hook: r -> replacement value for c_const(r)
_C_OVERRIDES: dict[int, int] = {}


@dataclass(frozen=True)
class CoefficientVector:
    """Integer coefficients of a polynomial in k, lowest power first."""

    ell: int
    parity: Parity
    coeffs: tuple[int, ...]

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0


@dataclass(frozen=True)
class VerificationReport:
    r: int
    series_order: int
    structural: bool
    series: bool
    lhs: RationalFunction
    rhs: RationalFunction

    @property
    def passed(self) -> bool:
        return self.structural and self.series


def _int_coeffs(p: Polynomial) -> tuple[int, ...]:
    assert all(c.denominator == 1 for c in p.coeffs)
    return tuple(int(c) for c in p.coeffs)


def _check_ell(ell: int) -> None:
    if ell < 1:
        raise InvalidIndex(f"ell must be >= 1, got {ell}")


def a_coeffs(ell: int) -> CoefficientVector:
    _check_ell(ell)
    k = Polynomial.x()
    p = Polynomial.const(1)
    for j in range(ell):
        p = p * (k * k - j * j)
    return CoefficientVector(ell, "even", _int_coeffs(p))


def b_coeffs(ell: int) -> CoefficientVector:
    _check_ell(ell)
    k = Polynomial.x()
    p = 2 * k + 1
    for j in range(ell):
        p = p * (k - j) * (k + 1 + j)
    return CoefficientVector(ell, "odd", _int_coeffs(p))


def c_const(r: int) -> int:
    """c_{2l} = (2l)!/2 and c_{2l+1} = (2l+1)!."""
    if r < 1:
        raise InvalidIndex(f"c_r needs r >= 1, got {r}")
    if r in _C_OVERRIDES:
        return _C_OVERRIDES[r]
    if r % 2 == 0:
        return factorial(r) // 2
    return factorial(r)


@contextlib.contextmanager
def corrupted_c_constant(r: int, value: int | None = None) -> Iterator[None]:
    """Temporarily replace c_const(r); used to check that verification can fail."""
    old = _C_OVERRIDES.get(r)
    _C_OVERRIDES[r] = c_const(r) + 1 if value is None else value
    try:
        yield
    finally:
        if old is None:
            del _C_OVERRIDES[r]
        else:
            _C_OVERRIDES[r] = old


def coeffs_for_r(r: int) -> CoefficientVector:
    """a_{l,*} for r = 2l, b_{l,*} for r = 2l+1."""
    if r < 2:
        raise InvalidIndex(f"identity needs r >= 2, got {r}")
    ell, odd = divmod(r, 2)
    return b_coeffs(ell) if odd else a_coeffs(ell)


def combine_polylogs(coeffs: CoefficientVector) -> RationalFunction:
    """sum_i coeffs[i] * Li_{-i}(x)."""
    total = RationalFunction(0)
    for i, c in enumerate(coeffs.coeffs):
        if c:
            total = total + polylog_closed(i).scale(c)
    return total


def _x_ell_one_plus_x_over(ell: int, n: int) -> RationalFunction:
    return RationalFunction.over_one_minus_x(Polynomial.monomial(ell) * Polynomial((1, 1)), n)


def rhs_closed(r: int) -> RationalFunction:
    if r < 2:
        raise InvalidIndex(f"identity needs r >= 2, got {r}")
    ell, odd = divmod(r, 2)
    n = 2 * ell + 2 if odd else 2 * ell + 1
    return _x_ell_one_plus_x_over(ell, n).scale(c_const(r))


def lhs_series(coeffs: CoefficientVector, N: int) -> TruncatedSeries:
    """Left side summed directly as sum_k P(k) x^k, never touching closed forms."""
    total = TruncatedSeries([], N)
    for i, c in enumerate(coeffs.coeffs):
        if c:
            total = total + polylog_series(i, N).scale(c)
    return total


def verify_identity(r: int, series_order: int = 60) -> VerificationReport:
    coeffs = coeffs_for_r(r)
    lhs = combine_polylogs(coeffs)
    rhs = rhs_closed(r)
    series_ok = lhs_series(coeffs, series_order) == rf_series(rhs, series_order)
    return VerificationReport(r, series_order, lhs == rhs, series_ok, lhs, rhs)


def proof_operator(f: RationalFunction, ell: int, parity: Parity) -> RationalFunction:
    """(x d/dx)^2 - l^2 for even, (x d/dx)^2 + x d/dx - l(l+1) for odd.

    On x^k these act by (k-l)(k+l) and (k-l)(k+l+1) respectively.
    """
    d1 = euler_derivative(f)
    d2 = euler_derivative(d1)
    if parity == "even":
        return d2 - f.scale(ell * ell)
    if parity == "odd":
        return d2 + d1 - f.scale(ell * (ell + 1))
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def b_even_closed(ell: int) -> RationalFunction:
    """B_{2l}(x) = (-1)^l x^l (1+x) / (1-x)^(2l+1)."""
    _check_ell(ell)
    return _x_ell_one_plus_x_over(ell, 2 * ell + 1).scale((-1) ** ell)
