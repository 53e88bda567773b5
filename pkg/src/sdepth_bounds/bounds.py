"""Closed-form upper bounds on the Stanley depth after adjoining variables.

Two families are covered:

* ``I' = ((x_1..x_t) ∩ (x_{t+1}..x_n), x_{n+1}..x_{n+p})`` -- the rational
  counting bound, its sharpened quadratic-root form, and the overlap variant
  for intersections of primary ideals;
* ``I' = (I_{n,2}, x_{n+1}..x_{n+p})`` -- the same pair of bounds for the
  degree-two squarefree Veronese ideal.

Both come from counting level-3 subsets in a normalized interval partition of
the characteristic poset; the counting inequalities themselves are exposed so
the bounds can be cross-checked against a direct scan over ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvariantViolation, ParameterError
from .ideal import corollary_reduction
from .surd import Surd, binom, cmp_surd, floor_surd


@dataclass(frozen=True)
class BoundValue:
    tag: str
    applicable: bool
    exact: Optional[Surd] = None
    floor: Optional[int] = None

    @classmethod
    def of(cls, tag: str, exact) -> BoundValue:
        exact = Surd.coerce(exact)
        return cls(tag, True, exact, floor_surd(exact))

    @classmethod
    def not_applicable(cls, tag: str) -> BoundValue:
        return cls(tag, False)

    def to_json(self) -> dict:
        if not self.applicable:
            return {"applicable": False, "exact": None, "floor": None}
        return {"applicable": True, "exact": self.exact.to_json(), "floor": self.floor}

    @classmethod
    def from_json(cls, tag: str, d: dict) -> BoundValue:
        if not d["applicable"]:
            return cls.not_applicable(tag)
        return cls(tag, True, Surd.from_json(d["exact"]), d["floor"])


def _check_intersection(n: int, t: int, p: int):
    if not 1 <= t < n:
        raise ParameterError(f"need 1 <= t < n, got n={n}, t={t}")
    if p < 2:
        raise ParameterError(f"need p >= 2 adjoined variables, got p={p}")


def _check_veronese(n: int, p: int):
    if n < 2 or p < 2:
        raise ParameterError(f"need n, p >= 2, got n={n}, p={p}")


# ---------------------------------------------------------------------------
# two-prime intersection family


def level3_total_intersection(n: int, t: int, p: int) -> int:
    """Number of 3-subsets in the characteristic poset of the extended two-prime ideal."""
    return binom(n, 3) - binom(t, 3) - binom(n - t, 3) + p * binom(n, 2) + n * binom(p, 2) + binom(p, 3)


def counting_lhs_intersection(n: int, t: int, p: int, k: int) -> Fraction:
    """Minimum number of 3-subsets consumed, with the ``p*C(k-1,2)`` term merged."""
    cross = binom(n, 2) - binom(t, 2) - binom(n - t, 2)
    return cross * (k - 2) + (n * p + binom(p, 2) - Fraction(p * (k - 1), 2)) * (k - 2)


def counting_lhs_intersection_unmerged(n: int, t: int, p: int, k: int) -> int:
    cross = binom(n, 2) - binom(t, 2) - binom(n - t, 2)
    return cross * (k - 2) + p * binom(k - 1, 2) + (n * p + binom(p, 2) - p * (k - 1)) * (k - 2)


def counting_feasible_intersection(n: int, t: int, p: int, k: int) -> bool:
    if k < 2:
        raise ParameterError(f"counting inequality needs k >= 2, got {k}")
    merged = counting_lhs_intersection(n, t, p, k)
    if merged != counting_lhs_intersection_unmerged(n, t, p, k):
        raise InvariantViolation(f"merged and unmerged counts differ at {(n, t, p, k)}")
    return merged <= level3_total_intersection(n, t, p)


def cap_intersection(n: int, p: int) -> Fraction:
    """Prior cap ``(n+2)/2 + p`` used to linearize the counting inequality."""
    return Fraction(n + 2, 2) + p


def thm1_value(n: int, t: int, p: int) -> Fraction:
    den = t * (n - t) + n * p - Fraction(p * (n + 2), 4)
    if den <= 0:
        raise InvariantViolation(f"nonpositive denominator {den} at {(n, t, p)}")
    return 2 + level3_total_intersection(n, t, p) / den


def bound_thm1(n: int, t: int, p: int) -> BoundValue:
    """Rational bound ``2 + (#3-subsets) / (t(n-t) + np - p(n+2)/4)``."""
    _check_intersection(n, t, p)
    return BoundValue.of("thm1", thm1_value(n, t, p))


def discriminant_intersection(n: int, t: int, p: int) -> int:
    """Discriminant in ``k`` of the counting inequality written as a quadratic."""
    return (
        (36 * p * t + 36 * t * t) * n * n
        - 36 * (t * t * p - t * p * p + 2 * t**3) * n
        + 12 * p * p
        - 36 * p * p * t * t
        - 3 * p**4
        + 36 * t**4
    )


def threshold_n0(t: int, p: int) -> Surd:
    """``t - p/2 + p*sqrt(1 + (p^2-4)/(3t(t+p)))`` as a single surd.

    The nested radical is rationalized: with ``m = 3t(t+p)`` it equals
    ``(p/m) * sqrt(m * (m + p^2 - 4))``.
    """
    if t < 1 or p < 2:
        raise ParameterError(f"need t >= 1, p >= 2, got t={t}, p={p}")
    m = 3 * t * (t + p)
    return Surd(Fraction(2 * t - p, 2), Fraction(p, m), m * (m + p * p - 4))


def n0_condition(n: int, t: int, p: int) -> bool:
    return cmp_surd(n, threshold_n0(t, p)) >= 0


def _center_intersection(n: int, t: int, p: int) -> Fraction:
    return n + Fraction(p, 2) + Fraction(t * (n - t), p) + 1


def bound_thm2(n: int, t: int, p: int) -> BoundValue:
    """Smaller root of the counting quadratic, valid once ``n >= n0(t, p)``."""
    _check_intersection(n, t, p)
    if not n0_condition(n, t, p):
        return BoundValue.not_applicable("thm2")
    disc = discriminant_intersection(n, t, p)
    if disc < 0:
        raise InvariantViolation(f"negative discriminant {disc} at {(n, t, p)} with n >= n0")
    return BoundValue.of("thm2", Surd(_center_intersection(n, t, p), Fraction(-1, 6 * p), disc))


def bound_corollary(n: int, t: int, r: int) -> BoundValue:
    """Bound for ``Q ∩ Q'`` with radicals ``(x_1..x_t)`` and ``(x_{r+1}..x_n)``."""
    n2, t2, p2 = corollary_reduction(n, t, r)
    if p2 < 2:
        return BoundValue.not_applicable("corollary")
    return BoundValue.of("corollary", thm1_value(n2, t2, p2))


# ---------------------------------------------------------------------------
# degree-two Veronese family


def veronese_floor_ratio(n: int) -> int:
    """``floor(C(n,3) / C(n,2))``, which equals ``floor((n-2)/3)``."""
    return (n - 2) // 3


def counting_lhs_veronese(n: int, p: int, k: int) -> int:
    return binom(n, 2) * (k - 2) + p * binom(k - 1, 2) + (n * p + binom(p, 2) - p * (k - 1)) * (k - 2)


def counting_lhs_veronese_merged(n: int, p: int, k: int) -> Fraction:
    return (binom(n, 2) + n * p + binom(p, 2) + Fraction(p * (1 - k), 2)) * (k - 2)


def counting_feasible_veronese(n: int, p: int, k: int) -> bool:
    if k < 2:
        raise ParameterError(f"counting inequality needs k >= 2, got {k}")
    lhs = counting_lhs_veronese(n, p, k)
    if lhs != counting_lhs_veronese_merged(n, p, k):
        raise InvariantViolation(f"merged and unmerged counts differ at {(n, p, k)}")
    return lhs <= binom(n + p, 3)


def bound_veronese_base(n: int) -> int:
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    return veronese_floor_ratio(n) + 2


def cap_veronese(n: int, p: int) -> int:
    if n < 2 or p < 0:
        raise ParameterError(f"need n >= 2, p >= 0, got n={n}, p={p}")
    return veronese_floor_ratio(n) + 2 + p


def thm3_value(n: int, p: int) -> Fraction:
    den = binom(n, 2) + n * p - p - Fraction(p, 2) * veronese_floor_ratio(n)
    if den <= 0:
        raise InvariantViolation(f"nonpositive denominator {den} at {(n, p)}")
    return 2 + Fraction(binom(n + p, 3)) / den


def bound_thm3(n: int, p: int) -> BoundValue:
    _check_veronese(n, p)
    return BoundValue.of("thm3", thm3_value(n, p))


def discriminant_veronese(n: int, p: int) -> int:
    return (
        9 * n**4
        + (24 * p - 18) * n**3
        + (18 * p * p - 36 * p + 9) * n * n
        - (18 * p * p - 12 * p) * n
        + 12 * p * p
        - 3 * p**4
    )


def thm4_value(n: int, p: int) -> Surd:
    disc = discriminant_veronese(n, p)
    if disc < 0:
        raise InvariantViolation(f"negative discriminant {disc} at {(n, p)}")
    center = Fraction(n * (n - 1), 2 * p) + Fraction(p, 2) + n + 1
    return Surd(center, Fraction(-1, 6 * p), disc)


def bound_thm4(n: int, p: int) -> BoundValue:
    """Smaller root of the Veronese counting quadratic, valid for ``n >= p - 1``."""
    _check_veronese(n, p)
    if n < p - 1:
        return BoundValue.not_applicable("thm4")
    return BoundValue.of("thm4", thm4_value(n, p))


def bound_iterated_adjoin(base: int, p: int) -> int:
    """Adjoining one variable raises sdepth by at most one, so ``p`` of them by ``p``."""
    if p < 0:
        raise ParameterError(f"need p >= 0, got {p}")
    return base + p


def max_k_from_counting(family: str, *params: int) -> int:
    """Largest ``k <= cap`` passing the family's counting inequality (scanned, not solved)."""
    if family == "intersection":
        n, t, p = params
        _check_intersection(n, t, p)
        cap = floor_surd(cap_intersection(n, p))
        ok = lambda k: counting_feasible_intersection(n, t, p, k)  # noqa: E731
    elif family == "veronese":
        n, p = params
        _check_veronese(n, p)
        cap = cap_veronese(n, p)
        ok = lambda k: counting_feasible_veronese(n, p, k)  # noqa: E731
    else:
        raise ParameterError(f"unknown family {family!r}")
    best = 2
    for k in range(2, cap + 1):
        if ok(k):
            best = k
    return best
