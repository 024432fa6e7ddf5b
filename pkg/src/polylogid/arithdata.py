"""Primes, Legendre symbols, elliptic-curve coefficients and family data.

Family data is a CSV file with header ``form_id,p,lambda[,weight]``; lines
starting with ``#`` are comments and a missing weight defaults to 1.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import warnings
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np

from .errors import BadReduction, DuplicateRecord, NoData, NotOddPrime, ParseError
from .satake import is_prime

log = logging.getLogger(__name__)

SEGMENT_THRESHOLD = 10**7
HASSE_SLACK = 1e-9


class HasseBoundWarning(UserWarning):
    """A coefficient exceeds |lambda| <= 2."""


def _simple_sieve(limit: int) -> np.ndarray:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if is_p[q]:
            is_p[q * q :: q] = False
    return np.flatnonzero(is_p)


def _segmented_sieve(limit: int, segment: int = 2**22) -> np.ndarray:
    base = _simple_sieve(math.isqrt(limit))
    chunks = [base]
    lo = base[-1] + 1 if len(base) else 2
    while lo <= limit:
        hi = min(lo + segment - 1, limit)
        mark = np.ones(hi - lo + 1, dtype=bool)
        for q in base:
            q = int(q)
            if q * q > hi:
                break
            start = max(q * q, -(-lo // q) * q)
            mark[start - lo :: q] = False
        chunks.append(np.flatnonzero(mark) + lo)
        lo = hi + 1
    return np.concatenate(chunks)


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit in ascending order."""
    if limit < 2:
        return []
    arr = _simple_sieve(limit) if limit <= SEGMENT_THRESHOLD else _segmented_sieve(limit)
    return arr.tolist()


def first_primes(n: int) -> list[int]:
    limit = 16
    while True:
        ps = sieve_primes(limit)
        if len(ps) >= n:
            return ps[:n]
        limit *= 2


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """(a|p) by Euler's criterion."""
    _check_odd_prime(p)
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


@dataclass(frozen=True)
class EllipticCurve:
    """y^2 = x^3 + A x + B."""

    A: int
    B: int

    @property
    def discriminant(self) -> int:
        return -16 * (4 * self.A**3 + 27 * self.B**2)

    def is_singular(self) -> bool:
        return self.discriminant == 0

    def has_good_reduction(self, p: int) -> bool:
        return self.discriminant % p != 0

    def rhs(self, x: int) -> int:
        return x**3 + self.A * x + self.B

    def count_points(self, p: int) -> int:
        """#E(F_p) by enumerating (x, y) pairs, point at infinity included."""
        squares: dict[int, int] = {}
        for y in range(p):
            squares[y * y % p] = squares.get(y * y % p, 0) + 1
        return 1 + sum(squares.get(self.rhs(x) % p, 0) for x in range(p))


def elliptic_lambda(curve: EllipticCurve, p: int, negate: bool = False) -> tuple[int, float]:
    """S = sum_x ((x^3+Ax+B)/p) and lambda = S / sqrt(p).

    The sign follows lambda = +S/sqrt(p); the usual a_p normalisation is
    -S, available with ``negate=True``.
    """
    _check_odd_prime(p)
    if not curve.has_good_reduction(p):
        raise BadReduction(f"y^2 = x^3 + {curve.A}x + {curve.B} is singular mod {p}")
    s = sum(legendre(curve.rhs(x), p) for x in range(p))
    n_points = curve.count_points(p)
    if n_points != p + 1 + s:
        raise ArithmeticError(f"point count {n_points} != p + 1 + S = {p + 1 + s}")
    if negate:
        s = -s
    return s, s / math.sqrt(p)


@dataclass(frozen=True)
class FamilyRecord:
    form_id: str
    p: int
    lam: float
    weight: float = 1.0


class FamilyData:
    """Per-form, per-prime normalised coefficients lambda_f(p) with weights."""

    def __init__(self, records: Iterable[FamilyRecord]):
        self.records: tuple[FamilyRecord, ...] = tuple(records)
        seen: set[tuple[str, int]] = set()
        by_p: dict[int, list[FamilyRecord]] = {}
        for rec in self.records:
            key = (rec.form_id, rec.p)
            if key in seen:
                raise DuplicateRecord(f"duplicate record for form {rec.form_id!r} at p={rec.p}")
            seen.add(key)
            by_p.setdefault(rec.p, []).append(rec)
        self._by_p = {p: tuple(rs) for p, rs in sorted(by_p.items())}

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[FamilyRecord]:
        return iter(self.records)

    def primes(self) -> list[int]:
        return list(self._by_p)

    def at(self, p: int) -> tuple[FamilyRecord, ...]:
        return self._by_p.get(p, ())

    def total_weight(self, p: int) -> float:
        return math.fsum(rec.weight for rec in self.at(p))


def _parse_row(row: list[str], lineno: int) -> FamilyRecord:
    if len(row) not in (3, 4):
        raise ParseError(f"expected 3 or 4 fields, got {len(row)}", lineno)
    form_id = row[0].strip()
    if not form_id:
        raise ParseError("empty form_id", lineno)
    try:
        p = int(row[1])
    except ValueError:
        raise ParseError(f"p is not an integer: {row[1]!r}", lineno) from None
    if not is_prime(p):
        raise ParseError(f"p={p} is not prime", lineno)
    try:
        lam = float(row[2])
        weight = float(row[3]) if len(row) == 4 and row[3].strip() else 1.0
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    if not (math.isfinite(lam) and math.isfinite(weight)):
        raise ParseError("non-finite value", lineno)
    if weight < 0:
        raise ParseError(f"negative weight {weight}", lineno)
    if abs(lam) > 2 + HASSE_SLACK:
        warnings.warn(
            f"line {lineno}: |lambda| = {abs(lam)} exceeds the Hasse bound 2",
            HasseBoundWarning,
            stacklevel=3,
        )
    return FamilyRecord(form_id, p, lam, weight)


def load_family(source: IO[bytes] | IO[str] | bytes | str) -> FamilyData:
    """Parse the ``form_id,p,lambda[,weight]`` CSV format."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    records: list[FamilyRecord] = []
    header_seen = False
    seen: set[tuple[str, int]] = set()
    for lineno, line in enumerate(io.StringIO(text), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        row = next(csv.reader([line]))
        if not header_seen:
            cols = [c.strip().lower() for c in row]
            if cols[:3] != ["form_id", "p", "lambda"] or cols[3:] not in ([], ["weight"]):
                raise ParseError(f"bad header {row!r}; expected form_id,p,lambda[,weight]", lineno)
            header_seen = True
            continue
        rec = _parse_row(row, lineno)
        if (rec.form_id, rec.p) in seen:
            raise DuplicateRecord(f"duplicate record for form {rec.form_id!r} at p={rec.p}", lineno)
        seen.add((rec.form_id, rec.p))
        records.append(rec)
    if not header_seen:
        raise ParseError("missing header line", None)
    log.debug("loaded %d family records", len(records))
    return FamilyData(records)


def empirical_moment(family: FamilyData, r: int, p: int) -> float:
    """(1/W) sum_f w(f) lambda_f(p)^r over forms with data at p."""
    if r < 0:
        raise ValueError("r must be non-negative")
    recs = family.at(p)
    if not recs:
        raise NoData(f"no family records at p={p}")
    total = family.total_weight(p)
    if total == 0:
        raise NoData(f"all weights vanish at p={p}")
    return math.fsum(rec.weight * rec.lam**r for rec in recs) / total
