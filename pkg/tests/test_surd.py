from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdepth_bounds.errors import UnsupportedComparison
from sdepth_bounds.surd import (
    Surd,
    binom,
    cmp_mixed,
    cmp_surd,
    floor_surd,
    render_decimal,
    sign_two_radicals,
)

mpmath.mp.dps = 80

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)
radicands = st.integers(min_value=0, max_value=10**8)
surds = st.builds(Surd, rationals, rationals, radicands)


def mp(x: Surd):
    return mpmath.mpf(x.a.numerator) / x.a.denominator + mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(x.r)


def test_normalization_folds_squares():
    assert Surd(1, 2, 9) == 7
    assert Surd(1, 3, 12) == Surd(1, 6, 3)
    assert Surd(Fraction(1, 2), 0, 5).r == 0


def test_binom_outside_range():
    assert binom(5, -1) == 0
    assert binom(3, 5) == 0
    assert binom(-2, 1) == 0
    assert binom(6, 3) == 20


def test_arithmetic_on_common_radicand():
    x, y = Surd(1, 2, 3), Surd(Fraction(1, 2), -1, 3)
    assert x + y == Surd(Fraction(3, 2), 1, 3)
    assert x - y == Surd(Fraction(1, 2), 3, 3)
    assert x * y == Surd(Fraction(1, 2) - 6, -1 + 1, 3)
    assert (x / 2) == Surd(Fraction(1, 2), 1, 3)
    with pytest.raises(UnsupportedComparison):
        Surd(0, 1, 2) + Surd(0, 1, 3)


def test_str_and_json_round_trip():
    x = Surd(Fraction(145, 6), Fraction(-1, 36), 343044)
    assert str(x) == "145/6 - 1/36*sqrt(343044)"
    assert Surd.from_json(x.to_json()) == x
    assert str(Surd(Fraction(10, 3))) == "10/3"


def test_render_marks_inexact():
    assert render_decimal(Surd(Fraction(1, 4))) == "0.250000"
    assert render_decimal(Surd(Fraction(1, 3))).endswith("…")
    assert render_decimal(Surd(0, 1, 2)).startswith("1.414213")


def test_cmp_surd_rejects_different_radicands():
    with pytest.raises(UnsupportedComparison):
        cmp_surd(Surd(0, 1, 2), Surd(0, 1, 3))
    assert cmp_mixed(Surd(0, 1, 2), Surd(0, 1, 3)) < 0


def test_floor_near_integers():
    # 5 - sqrt(24) is just above 0.1; 2*sqrt(2)^2 = 8 exactly
    assert floor_surd(Surd(5, -1, 24)) == 0
    assert floor_surd(Surd(0, 1, 10**20)) == 10**10
    assert floor_surd(Surd(0, 1, 10**20 - 1)) == 10**10 - 1
    assert floor_surd(Surd(0, -1, 10**20 - 1)) == -(10**10)


@settings(max_examples=10_000, deadline=None)
@given(surds, surds)
def test_cmp_agrees_with_high_precision(x, y):
    want = mpmath.sign(mp(x) - mp(y))
    if abs(mp(x) - mp(y)) < mpmath.mpf(10) ** -60:
        return
    assert cmp_mixed(x, y) == want


@settings(max_examples=2_000, deadline=None)
@given(surds)
def test_floor_agrees_with_high_precision(x):
    assert floor_surd(x) == int(mpmath.floor(mp(x)))


@settings(max_examples=1_000, deadline=None)
@given(rationals, rationals, st.integers(0, 10**6), rationals, st.integers(0, 10**6))
def test_sign_two_radicals(alpha, beta, r, gamma, s):
    v = mpmath.mpf(alpha.numerator) / alpha.denominator
    v += mpmath.mpf(beta.numerator) / beta.denominator * mpmath.sqrt(r)
    v += mpmath.mpf(gamma.numerator) / gamma.denominator * mpmath.sqrt(s)
    if abs(v) < mpmath.mpf(10) ** -60:
        return
    assert sign_two_radicals(alpha, beta, r, gamma, s) == mpmath.sign(v)


@given(surds, surds)
def test_ordering_is_consistent(x, y):
    assert (x < y) == (cmp_mixed(x, y) < 0)
    assert (x <= y) == (cmp_mixed(x, y) <= 0)
    assert cmp_mixed(x, y) == -cmp_mixed(y, x)
