"""Exact comparison of the rational and quadratic-root bounds.

Veronese family: the root bound never exceeds the rational one once
``n >= p - 1``.  The rational bound depends on ``n mod 3`` through
``floor((n-2)/3)``, so each residue class gets its own closed forms and a
threshold ``n_i`` beyond which the root bound wins.

Two-prime family: neither bound dominates.  The root bound is the smaller one
exactly when ``3n^2 + 6np - 4p^2 + 4 >= 0`` and ``t`` lies between the roots
``t_l``, ``t_u`` of ``24t^2 - 24nt + 3n^2 - 6np + 4p^2 - 4``.  The helpers
below evaluate every intermediate polynomial so the chain of equivalences can
be checked pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import (
    cap_intersection,
    discriminant_intersection,
    discriminant_veronese,
    n0_condition,
    thm1_value,
    thm3_value,
    thm4_value,
    threshold_n0,
)
from .errors import InvariantViolation, ParameterError
from .surd import Surd, cmp_mixed, cmp_surd

# ---------------------------------------------------------------------------
# Veronese family: residue-class closed forms


@dataclass(frozen=True)
class Thm5Case:
    """Closed forms for ``n = 3s + 1``, ``3s + 2`` or ``3s`` (residue 1, 2, 0)."""

    residue: int
    s: int
    u: Fraction
    l: Surd
    dv: int
    r_poly: int
    s_threshold: Surd
    n_threshold: Surd


def _case_poly(residue: int, s: int, p: int) -> tuple[Fraction, Fraction, int, int, Fraction]:
    """(u, rational part of l, dv, r, coefficient multiplying sqrt(dv) in the squared test)."""
    if residue == 1:
        u = Fraction(
            27 * s**3 + 27 * s * s * (p + 2) + 3 * s * (3 * p * p + 10 * p + 5) + p**3 + 5 * p,
            3 * s * (9 * s + 5 * p + 3) + 3 * p,
        )
        l0 = Fraction(27 * s * s + 9 * (2 * p + 1) * s + 3 * p * p + 12 * p, 6 * p)
        dv = (
            729 * s**4
            + (648 * p + 486) * s**3
            + (162 * p * p + 324 * p + 81) * s * s
            + (54 * p * p + 36 * p) * s
            + 12 * p * p
            - 3 * p**4
        )
        r = (
            243 * s**4
            + (243 * p + 162) * s**3
            + (63 * p * p + 126 * p + 27) * s * s
            + (15 * p + 27 * p * p - 3 * p**3) * s
            + 2 * p * p
            + 3 * p**3
            - 2 * p**4
        )
        w = 9 * s * s + (5 * p + 3) * s + p
    elif residue == 2:
        u = Fraction(
            27 * s**3 + 27 * (p + 3) * s * s + (9 * p * p + 48 * p + 60) * s + p**3 + 3 * p * p + 14 * p + 12,
            27 * s * s + 3 * (5 * p + 9) * s + 6 * p + 6,
        )
        l0 = Fraction(27 * s * s + 9 * (2 * p + 3) * s + 3 * p * p + 18 * p + 6, 6 * p)
        dv = (
            729 * s**4
            + (648 * p + 1458) * s**3
            + (162 * p * p + 972 * p + 1053) * s * s
            + (162 * p * p + 468 * p + 324) * s
            - 3 * p**4
            + 48 * p * p
            + 72 * p
            + 36
        )
        r = (
            243 * s**4
            + 243 * (p + 2) * s**3
            + (63 * p * p + 351 * p + 351) * s * s
            + (-3 * p**3 + 57 * p * p + 162 * p + 108) * s
            - 2 * p**4
            + 14 * p * p
            + 24 * p
            + 12
        )
        w = 9 * s * s + (5 * p + 9) * s + 2 * p + 2
    elif residue == 0:
        u = Fraction(
            27 * s**3 + 27 * (p + 1) * s * s + (9 * p * p + 12 * p - 12) * s + p**3 - 3 * p * p - 4 * p,
            27 * s * s + 3 * (5 * p - 3) * s - 3 * p,
        )
        l0 = Fraction(27 * s * s + 9 * (2 * p - 1) * s + 3 * p * p + 6 * p, 6 * p)
        dv = (
            729 * s**4
            + (648 * p - 486) * s**3
            + (162 * p * p - 324 * p + 81) * s * s
            + (-54 * p * p + 36 * p) * s
            + 12 * p * p
            - 3 * p**4
        )
        r = (
            243 * s**4
            + (243 * p - 162) * s**3
            + (63 * p * p - 126 * p + 27) * s * s
            + (-3 * p**3 - 21 * p * p + 15 * p) * s
            + 2 * p * p
            + 3 * p**3
            - 2 * p**4
        )
        w = 9 * s * s + (5 * p - 3) * s - p
    else:
        raise ParameterError(f"residue must be 0, 1 or 2, got {residue}")
    return u, l0, dv, r, w


def case_discriminant(residue: int, p: int) -> int:
    """Discriminant of the quadratic in ``s`` deciding the residue class."""
    if residue == 1:
        return 96 * p**4 - 288 * p**3 + 273 * p * p - 108 * p + 36
    if residue == 2:
        return 96 * p * p - 15
    if residue == 0:
        return 3 * (p - 1) * (32 * p**3 - 16 * p * p + 3 * p - 3)
    raise ParameterError(f"residue must be 0, 1 or 2, got {residue}")


def thm5_case_thresholds(p: int, residue: int) -> tuple[Surd, Surd]:
    """``(s_i, n_i)``: the root bound wins in this residue class for ``n >= n_i``."""
    if p < 2:
        raise ParameterError(f"need p >= 2, got {p}")
    disc = case_discriminant(residue, p)
    if residue == 1:
        s_thr = Surd(Fraction(-(6 * p * p - 3 * p - 6), 6 * (5 * p - 6)), Fraction(1, 6 * (5 * p - 6)), disc)
        n_thr = Surd(Fraction(-6 * p * p + 13 * p - 6, 2 * (5 * p - 6)), Fraction(1, 2 * (5 * p - 6)), disc)
        if n_thr != 3 * s_thr + 1:
            raise InvariantViolation("n_1 != 3 s_1 + 1")
    elif residue == 2:
        s_thr = Surd(Fraction(-3 * (2 * p + 5), 30), Fraction(1, 30), disc)
        n_thr = Surd(Fraction(-6 * p + 5, 10), Fraction(1, 10), disc)
        if n_thr != 3 * s_thr + 2:
            raise InvariantViolation("n_2 != 3 s_2 + 2")
    else:
        s_thr = Surd(Fraction(-6 * p * p + 9 * p - 3, 6 * (5 * p - 3)), Fraction(1, 6 * (5 * p - 3)), disc)
        n_thr = Surd(Fraction(-6 * p * p + 9 * p - 3, 2 * (5 * p - 3)), Fraction(1, 2 * (5 * p - 3)), disc)
        if n_thr != 3 * s_thr:
            raise InvariantViolation("n_3 != 3 s_3")
    return s_thr, n_thr


def residue_split(n: int) -> tuple[int, int]:
    """``(residue, s)`` with ``n = 3s + residue`` for residues 1, 2 and ``n = 3s`` for 0."""
    q, res = divmod(n, 3)
    return res, q


def thm5_case(n: int, p: int) -> Thm5Case:
    if n < 2 or p < 2:
        raise ParameterError(f"need n, p >= 2, got n={n}, p={p}")
    residue, s = residue_split(n)
    u, l0, dv, r, _ = _case_poly(residue, s, p)
    l = Surd(l0, Fraction(-1, 6 * p), dv)
    s_thr, n_thr = thm5_case_thresholds(p, residue)
    return Thm5Case(residue, s, u, l, dv, r, s_thr, n_thr)


def case_matches_direct(n: int, p: int) -> bool:
    """The residue-class closed forms reproduce the direct bounds exactly."""
    case = thm5_case(n, p)
    if case.dv != discriminant_veronese(n, p):
        return False
    return case.u == thm3_value(n, p) and cmp_surd(case.l, thm4_value(n, p)) == 0


def thm4_beats_thm3(n: int, p: int) -> bool:
    """Whether the root bound is at most the rational bound (exact values)."""
    if n < 2 or p < 2:
        raise ParameterError(f"need n, p >= 2, got n={n}, p={p}")
    if discriminant_veronese(n, p) < 0:
        raise ParameterError(f"root bound undefined at n={n}, p={p}: negative discriminant")
    return cmp_surd(thm4_value(n, p), thm3_value(n, p)) <= 0


def dv2_minimum(p: int) -> int:
    """``dv_2((p-3)/3)``, the smallest value of ``dv_2`` over the admissible range."""
    return 3 * (p - 2) * (16 * p**3 - 40 * p * p + 27 * p - 6)


def lemma_section4_ordering(p: int) -> bool:
    """``p - 1 >= n_2 > n_3 > n_1`` for ``p >= 3``."""
    if p < 3:
        raise ParameterError(f"ordering is claimed for p >= 3, got {p}")
    _, n1 = thm5_case_thresholds(p, 1)
    _, n2 = thm5_case_thresholds(p, 2)
    _, n3 = thm5_case_thresholds(p, 0)
    return cmp_surd(n2, p - 1) <= 0 and cmp_mixed(n2, n3) > 0 and cmp_mixed(n3, n1) > 0


# ---------------------------------------------------------------------------
# two-prime family


@dataclass(frozen=True)
class Thm6Internals:
    n: int
    t: int
    p: int
    upper: Fraction
    lower: Optional[Surd]
    f4: int
    g4: int
    D: int
    df4: int
    n_l: Surd
    n_u: Surd
    n_0: Surd
    h: int
    h1: int
    h2: int
    delta1: int
    delta2: int
    t1: Optional[Surd]
    t2: Optional[Surd]
    t3: Optional[Surd]
    t4: Optional[Surd]

    @property
    def t_l(self) -> Optional[Surd]:
        return self.t3

    @property
    def t_u(self) -> Optional[Surd]:
        return self.t4


def _f4_coeffs(t: int, p: int) -> tuple[int, int, int]:
    a = 6 * p * p + 30 * t * p + 24 * t * t
    b = -3 * p**3 + 12 * p * p * t - 6 * p * p - 12 * t * p - 30 * t * t * p - 48 * t**3
    c = -4 * p**4 + 6 * p**3 + 4 * p * p - 12 * p * p * t * t + 12 * t * t * p + 24 * t**4
    return a, b, c


def f4_discriminant(t: int, p: int) -> int:
    return (
        3
        * p
        * p
        * (
            35 * p**4
            + (136 * t - 36) * p**3
            + (332 * t * t - 264 * t - 20) * p * p
            + (336 * t**3 - 264 * t * t - 112 * t) * p
            + 108 * t**4
            - 48 * t**3
            - 80 * t * t
        )
    )


def f4_roots(t: int, p: int) -> tuple[Surd, Surd]:
    """``(n_l, n_u)``, the roots in ``n`` of ``f_4``."""
    a, b, _ = _f4_coeffs(t, p)
    df4 = f4_discriminant(t, p)
    return Surd(Fraction(-b, 2 * a), Fraction(-1, 2 * a), df4), Surd(Fraction(-b, 2 * a), Fraction(1, 2 * a), df4)


def h1_value(n: int, t: int, p: int) -> int:
    """First quadratic factor of ``g_4^2 D - f_4^2``; negative on ``1 <= t <= n - 1``."""
    return (
        3 * (n - 2) * t * t
        - (3 * n * n - 6 * n) * t
        - (3 * n * n * p + 3 * n * p * p - 6 * n * p + 2 * p - 3 * p * p + p**3)
    )


def h2_value(n: int, t: int, p: int) -> int:
    return 24 * t * t - 24 * n * t + 3 * n * n - 6 * n * p + 4 * p * p - 4


def t_window_radicand(n: int, p: int) -> int:
    return 3 * n * n + 6 * n * p - 4 * p * p + 4


def thm6_internals(n: int, t: int, p: int) -> Thm6Internals:
    """Every intermediate quantity of the two-prime comparison, with identity checks.

    ``t1``/``t2`` need ``n >= 3``; at ``n = 2`` they are None and only the two
    bound values matter.
    """
    if not 1 <= t < n or p < 2:
        raise ParameterError(f"need 1 <= t < n and p >= 2, got {(n, t, p)}")
    a, b, c = _f4_coeffs(t, p)
    f4 = a * n * n + b * n + c
    g4 = 4 * n * t + 3 * n * p - 4 * t * t - 2 * p
    D = discriminant_intersection(n, t, p)
    df4 = f4_discriminant(t, p)
    if df4 != b * b - 4 * a * c:
        raise InvariantViolation(f"f_4 discriminant mismatch at {(n, t, p)}")
    n_l, n_u = f4_roots(t, p)
    h1, h2 = h1_value(n, t, p), h2_value(n, t, p)
    h = g4 * g4 * D - f4 * f4
    if h != 4 * p**3 * h1 * h2:
        raise InvariantViolation(f"h != 4 p^3 h_1 h_2 at {(n, t, p)}")
    delta1 = 3 * (n - 2) * (3 * n**3 - 6 * n * n + 12 * n * n * p + 12 * n * p * p - 24 * n * p + 4 * p**3 - 12 * p * p + 8 * p)
    delta2 = 288 * n * n + 576 * n * p - 384 * p * p + 384
    if n >= 3:
        den = 6 * (n - 2)
        t1 = Surd(Fraction(3 * n * n - 6 * n, den), Fraction(-1, den), delta1)
        t2 = Surd(Fraction(3 * n * n - 6 * n, den), Fraction(1, den), delta1)
    else:
        t1 = t2 = None
    q = t_window_radicand(n, p)
    if q >= 0:
        t3 = Surd(Fraction(n, 2), Fraction(-1, 12), 6 * q)
        t4 = Surd(Fraction(n, 2), Fraction(1, 12), 6 * q)
    else:
        t3 = t4 = None
    lower = None
    if D >= 0:
        lower = Surd(n + Fraction(p, 2) + Fraction(t * (n - t), p) + 1, Fraction(-1, 6 * p), D)
    return Thm6Internals(
        n, t, p, thm1_value(n, t, p), lower, f4, g4, D, df4, n_l, n_u, threshold_n0(t, p),
        h, h1, h2, delta1, delta2, t1, t2, t3, t4,
    )


def thm6_predicate(n: int, t: int, p: int) -> Optional[bool]:
    """Whether the root bound is at most the rational bound, by the ``t``-window test.

    Returns None when ``n < n0(t, p)``, where the root bound is not available.
    """
    if not 1 <= t < n or p < 2:
        raise ParameterError(f"need 1 <= t < n and p >= 2, got {(n, t, p)}")
    if not n0_condition(n, t, p):
        return None
    q = t_window_radicand(n, p)
    if q < 0:
        return False
    t_l = Surd(Fraction(n, 2), Fraction(-1, 12), 6 * q)
    t_u = Surd(Fraction(n, 2), Fraction(1, 12), 6 * q)
    return cmp_surd(max(1, t_l), t) <= 0 and cmp_surd(t, min(n - 1, t_u)) <= 0


def thm2_le_thm1(n: int, t: int, p: int) -> Optional[bool]:
    """Direct exact comparison of the two bounds (None when the root bound is unavailable)."""
    if not n0_condition(n, t, p):
        return None
    lower = Surd(n + Fraction(p, 2) + Fraction(t * (n - t), p) + 1, Fraction(-1, 6 * p), discriminant_intersection(n, t, p))
    return cmp_surd(lower, thm1_value(n, t, p)) <= 0


def lemma1_check(n: int, t: int, p: int) -> bool:
    """The larger root of the counting quadratic never fits under the prior cap when ``n >= n0``."""
    if not 1 <= t < n or p < 2:
        raise ParameterError(f"need 1 <= t < n and p >= 2, got {(n, t, p)}")
    if not n0_condition(n, t, p):
        return True
    disc = discriminant_intersection(n, t, p)
    if disc < 0:
        raise InvariantViolation(f"negative discriminant at {(n, t, p)} with n >= n0")
    upper_root = Surd(n + Fraction(p, 2) + Fraction(t * (n - t), p) + 1, Fraction(1, 6 * p), disc)
    return not cmp_surd(upper_root, cap_intersection(n, p)) <= 0


def lemma3_check(t: int, p: int) -> bool:
    """``n_u <= n_0``: above ``n_0`` the polynomial ``f_4`` is nonnegative."""
    if t < 1 or p < 2:
        raise ParameterError(f"need t >= 1, p >= 2, got t={t}, p={p}")
    _, n_u = f4_roots(t, p)
    return cmp_mixed(n_u, threshold_n0(t, p)) <= 0


def lemma4_check(n: int, p: int) -> bool:
    """``t_1 < 1`` and ``n - 1 < t_2``, so ``h_1 < 0`` for every admissible ``t``."""
    if n < 3 or n < p - 1 or p < 2:
        raise ParameterError(f"need n >= max(3, p - 1) and p >= 2, got n={n}, p={p}")
    ints = thm6_internals(n, 1, p)
    if ints.t1 + ints.t2 != n:
        raise InvariantViolation(f"t_1 + t_2 != n at {(n, p)}")
    return cmp_surd(ints.t1, 1) < 0 and cmp_surd(n - 1, ints.t2) < 0
