"""Exact rationals and quadratic surds.

Every bound in this package is either rational or of the form ``a + b*sqrt(r)``
with rational ``a``, ``b`` and a nonnegative integer ``r``.  Comparisons and
floors are decided by sign analysis and squaring on integers; floating point is
only used for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, floor, isqrt
from typing import Union

from .errors import UnsupportedComparison

Rat = Fraction
Number = Union[int, Fraction, "Surd"]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0``, ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def is_square(r: int) -> bool:
    if r < 0:
        return False
    s = isqrt(r)
    return s * s == r


@dataclass(frozen=True, eq=False)
class Surd:
    """The real number ``a + b*sqrt(r)``.

    Construction normalizes: ``b == 0`` or ``r == 0`` collapses to ``(a, 0, 0)``,
    and a perfect-square radicand is folded into ``a``.  For a fixed irrational
    radicand the pair ``(a, b)`` is therefore unique per value.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    r: int = 0

    def __post_init__(self):
        a, b, r = Fraction(self.a), Fraction(self.b), int(self.r)
        if r < 0:
            raise ValueError(f"negative radicand {r}")
        if b == 0 or r == 0:
            b, r = Fraction(0), 0
        else:
            root = isqrt(r)
            if root * root == r:
                a, b, r = a + b * root, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "r", r)

    @classmethod
    def coerce(cls, x: Number) -> Surd:
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        raise TypeError(f"cannot convert {type(x).__name__} to Surd")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # arithmetic -----------------------------------------------------------

    def _common_radicand(self, other: Surd) -> int:
        if self.b == 0:
            return other.r
        if other.b == 0 or other.r == self.r:
            return self.r
        raise UnsupportedComparison(
            f"radicands {self.r} and {other.r} do not share a quadratic field"
        )

    def __add__(self, other: Number) -> Surd:
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        r = self._common_radicand(o)
        return Surd(self.a + o.a, self.b + o.b, r)

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd(-self.a, -self.b, self.r)

    def __sub__(self, other: Number) -> Surd:
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> Surd:
        return (-self) + other

    def __mul__(self, other: Number) -> Surd:
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        r = self._common_radicand(o)
        return Surd(self.a * o.a + self.b * o.b * r, self.a * o.b + self.b * o.a, r)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Surd:
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Surd(self.a / q, self.b / q, self.r)
        if isinstance(other, Surd) and other.is_rational:
            return self / other.a
        return NotImplemented

    # order ----------------------------------------------------------------

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: |a| against |b|*sqrt(r)
        return sa * _sign(self.a * self.a - self.b * self.b * self.r)

    def __eq__(self, other) -> bool:
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return cmp_mixed(self, o) == 0

    __hash__ = None  # equal values may carry different radicands

    def __lt__(self, other: Number) -> bool:
        return cmp_mixed(self, Surd.coerce(other)) < 0

    def __le__(self, other: Number) -> bool:
        return cmp_mixed(self, Surd.coerce(other)) <= 0

    def __gt__(self, other: Number) -> bool:
        return cmp_mixed(self, Surd.coerce(other)) > 0

    def __ge__(self, other: Number) -> bool:
        return cmp_mixed(self, Surd.coerce(other)) >= 0

    # conversions ----------------------------------------------------------

    def __floor__(self) -> int:
        return floor_surd(self)

    def to_decimal(self, prec: int = 40) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            if self.b == 0:
                return +a
            b = Decimal(self.b.numerator) / Decimal(self.b.denominator)
            return a + b * Decimal(self.r).sqrt()

    def __float__(self) -> float:
        return float(self.to_decimal(30))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        head = f"{self.a} {sign} " if self.a else ("-" if self.b < 0 else "")
        return f"{head}{abs(self.b)}*sqrt({self.r})"

    def __repr__(self) -> str:
        return f"Surd({self})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "r": str(self.r), "text": str(self)}

    @classmethod
    def from_json(cls, d: dict) -> Surd:
        return cls(Fraction(d["a"]), Fraction(d["b"]), int(d["r"]))


def _pair_sign(beta: Fraction, r: int, gamma: Fraction, s: int) -> int:
    """Sign of ``beta*sqrt(r) + gamma*sqrt(s)``."""
    u = _sign(beta) if r else 0
    v = _sign(gamma) if s else 0
    if u == 0:
        return v
    if v == 0 or u == v:
        return u
    return u * _sign(beta * beta * r - gamma * gamma * s)


def sign_two_radicals(alpha, beta, r: int, gamma, s: int) -> int:
    """Exact sign of ``alpha + beta*sqrt(r) + gamma*sqrt(s)``."""
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    sy = _pair_sign(beta, r, gamma, s)
    sa = _sign(alpha)
    if sa == 0:
        return sy
    if sy == 0 or sy == sa:
        return sa
    # alpha and the radical part have opposite signs: compare squares
    gap = Surd(alpha * alpha - beta * beta * r - gamma * gamma * s, -2 * beta * gamma, r * s)
    return sa * gap.sign()


def cmp_surd(x: Number, y: Number) -> int:
    """Three-way exact comparison of two surds over a common radicand.

    Raises UnsupportedComparison when both sides are irrational with different
    radicands; use :func:`cmp_mixed` for that case.
    """
    x, y = Surd.coerce(x), Surd.coerce(y)
    return (x - y).sign()


def cmp_mixed(x: Number, y: Number) -> int:
    """Three-way exact comparison allowing different radicands on each side."""
    x, y = Surd.coerce(x), Surd.coerce(y)
    return sign_two_radicals(x.a - y.a, x.b, x.r, -y.b, y.r)


def floor_surd(x: Number) -> int:
    """Largest integer not exceeding ``x``."""
    x = Surd.coerce(x)
    if x.b == 0:
        return floor(x.a)
    sq = x.b * x.b * x.r
    approx = Fraction(isqrt(sq.numerator * sq.denominator), sq.denominator)
    m = floor(x.a + (approx if x.b > 0 else -approx))
    while (x - m).sign() < 0:
        m -= 1
    while (x - (m + 1)).sign() >= 0:
        m += 1
    return m


def render_decimal(x: Number, places: int = 6) -> str:
    """Decimal string truncated to ``places`` digits.

    A trailing ellipsis marks a truncated (inexact) rendering; its absence means
    the printed digits are the exact value.
    """
    x = Surd.coerce(x)
    scale = 10**places
    m = floor_surd(x * scale)
    exact = (x * scale - m).sign() == 0
    sign = "-" if m < 0 else ""
    q, rem = divmod(abs(m), scale)
    text = f"{sign}{q}.{rem:0{places}d}"
    return text if exact else text + "…"
