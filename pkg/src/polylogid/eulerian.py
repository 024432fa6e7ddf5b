"""Eulerian numbers and negative-order polylogarithms Li_{-r}(x)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb

from .errors import TooLarge
from .exactmath import Polynomial, RationalFunction, TruncatedSeries

BRUTEFORCE_MAX_R = 9


@dataclass(frozen=True)
class EulerianRow:
    r: int
    values: tuple[int, ...]


def eulerian_number(r: int, j: int) -> int:
    """E(r, j) from the alternating binomial sum.

    The sum nominally runs to l = j + 1, but that term is (0)**r * ...,
    which vanishes for r >= 1; stopping at l = j keeps E(0, 0) = 1 without
    relying on a 0**0 convention.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    if j < 0 or j > r:
        return 0
    return sum((-1) ** l * comb(r + 1, l) * (j - l + 1) ** r for l in range(j + 1))


def eulerian_bruteforce(r: int, j: int) -> int:
    """Count permutations of {1..r} with exactly j ascents."""
    if r > BRUTEFORCE_MAX_R:
        raise TooLarge(f"r={r} exceeds enumeration bound {BRUTEFORCE_MAX_R}")
    if r < 0:
        raise ValueError("r must be non-negative")
    count = 0
    for perm in permutations(range(r)):
        ascents = sum(1 for i in range(r - 1) if perm[i] < perm[i + 1])
        if ascents == j:
            count += 1
    return count


@lru_cache(maxsize=None)
def _recurrence_row(r: int) -> tuple[int, ...]:
    if r == 0:
        return (1,)
    prev = _recurrence_row(r - 1) + (0,)
    row = []
    for j in range(r + 1):
        left = (j + 1) * prev[j] if j < len(prev) else 0
        right = (r - j) * prev[j - 1] if j >= 1 else 0
        row.append(left + right)
    return tuple(row)


def eulerian_recurrence(r: int, j: int) -> int:
    """E(r, j) via (j+1)E(r-1, j) + (r-j)E(r-1, j-1); independent cross-check."""
    if j < 0 or j > r:
        return 0
    return _recurrence_row(r)[j]


def eulerian_row(r: int) -> EulerianRow:
    """E(r, 0), ..., E(r, r)."""
    return EulerianRow(r, tuple(eulerian_number(r, j) for j in range(r + 1)))


@lru_cache(maxsize=None)
def polylog_closed(r: int) -> RationalFunction:
    """Li_{-r}(x) = sum_j E(r, j) x^(r-j) / (1 - x)^(r+1); Li_0 = x/(1-x)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return RationalFunction.over_one_minus_x(Polynomial.x(), 1)
    num = [0] * (r + 1)
    for j in range(r + 1):
        num[r - j] = eulerian_number(r, j)
    return RationalFunction.over_one_minus_x(num, r + 1)


def polylog_series(r: int, N: int) -> TruncatedSeries:
    """sum_{k=1}^N k^r x^k, straight from the defining series."""
    if r < 0 or N < 0:
        raise ValueError("r and N must be non-negative")
    return TruncatedSeries([0] + [k**r for k in range(1, N + 1)], N)
