"""Exact univariate polynomial, rational-function and truncated-series arithmetic.

Scalars are :class:`fractions.Fraction`, which already keeps numerator and
denominator coprime with a positive denominator. Everything here is immutable;
arithmetic returns new objects in canonical form, so equality of two
:class:`RationalFunction` values is a plain structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DivisionByZero, NotExpandable

ExactRational = Fraction

Scalar = int | Fraction


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact scalar required, got {type(c).__name__}")


class Polynomial:
    """Dense polynomial in x; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # construction helpers

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def one_minus_x_power(cls, n: int) -> Polynomial:
        """(1 - x)**n."""
        p = cls.const(1)
        base = cls((1, -1))
        for _ in range(n):
            p = p * base
        return p

    # basic queries

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x):
        if isinstance(x, int):
            x = Fraction(x)
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    # ring operations

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial.const(_frac(other))

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Scalar) -> Polynomial:
        c = _frac(c)
        return Polynomial(a * c for a in self.coeffs)

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if len(rem) - 1 < dq:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c == 0:
                continue
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return self.divmod(other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return self.divmod(other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def euler(self) -> Polynomial:
        """x * d/dx, i.e. x**k -> k x**k."""
        return Polynomial(i * c for i, c in enumerate(self.coeffs))


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd over Q (zero if both inputs are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def poly_arith(op: str, p: Polynomial, q: Polynomial | Scalar) -> Polynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        if isinstance(q, Polynomial):
            raise TypeError("scale takes an exact scalar")
        return p.scale(q)
    raise ValueError(f"unknown polynomial op {op!r}")


class RationalFunction:
    """Quotient num/den kept reduced with a monic denominator.

    The canonical form is unique: gcd(num, den) = 1 and den has leading
    coefficient 1, so ``==`` is structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = 1):
        if not isinstance(num, Polynomial):
            num = Polynomial.const(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.const(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _trusted(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def over_one_minus_x(cls, num: Polynomial | Sequence[Scalar], n: int) -> RationalFunction:
        """num / (1 - x)**n."""
        if not isinstance(num, Polynomial):
            num = Polynomial(num)
        return cls(num, Polynomial.one_minus_x_power(n))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RationalFunction({format_rf(self)!r})"

    def __str__(self) -> str:
        return format_rf(self)

    def _coerce(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def __add__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        g = poly_gcd(self.den, other.den)
        a_cof = other.den // g
        b_cof = self.den // g
        return RationalFunction(self.num * a_cof + other.num * b_cof, self.den * a_cof)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction._trusted(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalFunction:
        return self._coerce(other) - self

    def __mul__(self, other) -> RationalFunction:
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return self._coerce(other) / self

    def scale(self, c: Scalar) -> RationalFunction:
        c = _frac(c)
        if c == 0:
            return RationalFunction(0)
        return RationalFunction._trusted(self.num.scale(c), self.den)

    def __call__(self, x):
        """Evaluate at a point; exact for int/Fraction arguments."""
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"pole at x = {x}")
        return self.num(x) / d

    def one_minus_x_form(self) -> tuple[Polynomial, int] | None:
        """Return (N, n) with self == N / (1 - x)**n when the denominator allows it."""
        n = self.den.degree
        ref = Polynomial.one_minus_x_power(n)
        # den is monic, so den == ref / ref.leading
        if self.den != ref.monic():
            return None
        return self.num.scale(ref.leading), n


def rf_arith(op: str, f: RationalFunction, g: RationalFunction) -> RationalFunction:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown rational-function op {op!r}")


def euler_derivative(f: RationalFunction) -> RationalFunction:
    """x f'(x) by the quotient rule."""
    num = f.num.derivative() * f.den - f.num * f.den.derivative()
    return RationalFunction(num * Polynomial.x(), f.den * f.den)


class TruncatedSeries:
    """Power series in x known through x**order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = (cs + [Fraction(0)] * (order + 1 - len(cs)))[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> TruncatedSeries:
        return cls(p.coeffs[: order + 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("TruncatedSeries", self.order, self.coeffs))

    def __repr__(self) -> str:
        body = format_poly(Polynomial(self.coeffs), ascending=True)
        return f"TruncatedSeries({body} + O(x^{self.order + 1}))"

    def _check(self, other: TruncatedSeries) -> None:
        if other.order != self.order:
            raise ValueError("series orders differ")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries((a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def scale(self, c: Scalar) -> TruncatedSeries:
        c = _frac(c)
        return TruncatedSeries((a * c for a in self.coeffs), self.order)

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, Polynomial):
            other = TruncatedSeries.from_polynomial(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        n = self.order + 1
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, self.order)

    def euler(self) -> TruncatedSeries:
        return TruncatedSeries((k * c for k, c in enumerate(self.coeffs)), self.order)


def rf_series(f: RationalFunction, N: int) -> TruncatedSeries:
    """Maclaurin coefficients of f through x**N by exact long division."""
    if N < 0:
        raise ValueError("N must be non-negative")
    d0 = f.den[0]
    if d0 == 0:
        raise NotExpandable("denominator vanishes at x = 0")
    den = f.den.coeffs
    out: list[Fraction] = []
    for k in range(N + 1):
        acc = f.num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return TruncatedSeries(out, N)


# formatting

def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial, var: str = "x", ascending: bool = False) -> str:
    """Human-readable form, highest power first: ``x^4 + 11x^3 + 11x^2 + x``."""
    if p.is_zero():
        return "0"
    parts: list[tuple[str, str]] = []
    order = range(p.degree + 1) if ascending else range(p.degree, -1, -1)
    for i in order:
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = _fmt_scalar(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag.numerator}{mono}"
            else:
                body = f"({_fmt_scalar(mag)}){mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_rf(f: RationalFunction, var: str = "x") -> str:
    """Prefer the N(x)/(1 - x)^n presentation when the denominator allows it."""
    if f.den.degree == 0:
        return format_poly(f.num, var)
    form = f.one_minus_x_form()
    if form is not None:
        num, n = form
        den = f"(1 - {var})" if n == 1 else f"(1 - {var})^{n}"
        return f"({format_poly(num, var)})/{den}"
    return f"({format_poly(f.num, var)})/({format_poly(f.den, var)})"
