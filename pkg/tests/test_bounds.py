from __future__ import annotations

from fractions import Fraction
from math import sqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sdepth_bounds.bounds import (
    BoundValue,
    bound_corollary,
    bound_iterated_adjoin,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_thm4,
    bound_veronese_base,
    cap_intersection,
    counting_feasible_intersection,
    counting_feasible_veronese,
    counting_lhs_intersection,
    counting_lhs_veronese,
    discriminant_intersection,
    discriminant_veronese,
    level3_total_intersection,
    max_k_from_counting,
    n0_condition,
    threshold_n0,
    thm1_value,
)
from sdepth_bounds.errors import ParameterError
from sdepth_bounds.surd import Surd, binom, floor_surd

params = st.tuples(st.integers(2, 60), st.integers(2, 30)).flatmap(
    lambda np_: st.tuples(st.just(np_[0]), st.integers(1, np_[0] - 1), st.just(np_[1]))
)


def test_known_floors():
    assert bound_thm1(6, 3, 3).floor == 5
    assert bound_thm1(6, 3, 3).exact == Fraction(124, 21)
    assert bound_thm2(7, 3, 5).floor == 7
    assert bound_thm1(7, 3, 5).floor == 8
    assert bound_thm2(66, 2, 3).floor == 42
    assert bound_thm1(66, 2, 3).floor == 41
    assert bound_corollary(8, 6, 4).exact == Fraction(21, 4)
    assert bound_thm3(5, 2).floor == 4
    assert bound_thm4(5, 2).floor == 3
    assert bound_thm3(11, 6).floor == 8
    assert bound_thm4(11, 6).floor == 7
    assert bound_iterated_adjoin(4, 3) == 7
    assert bound_veronese_base(5) == 3


def test_smallest_two_prime_case():
    assert bound_thm1(2, 1, 2).exact == Fraction(10, 3)
    assert bound_thm2(2, 1, 2).exact == 3


def test_level3_total_is_a_direct_count():
    for n, t, p in [(6, 3, 3), (5, 1, 2), (4, 2, 4)]:
        left, right = set(range(t)), set(range(t, n))
        total = 0
        from itertools import combinations

        for s in combinations(range(n + p), 3):
            s = set(s)
            if s & set(range(n, n + p)) or (s & left and s & right):
                total += 1
        assert total == level3_total_intersection(n, t, p)


@given(params)
def test_rational_bound_symmetric(ntp):
    n, t, p = ntp
    assert thm1_value(n, t, p) == thm1_value(n, n - t, p)
    assert discriminant_intersection(n, t, p) == discriminant_intersection(n, n - t, p)


@given(params)
def test_counting_merge_and_root_location(ntp):
    n, t, p = ntp
    for k in range(2, 8):
        counting_feasible_intersection(n, t, p, k)  # raises if the two forms differ
    b2 = bound_thm2(n, t, p)
    if b2.applicable:
        # the smaller root is where the counting inequality turns into equality
        x = b2.exact
        lhs = (x - 2) * (Fraction(binom(n, 2) - binom(t, 2) - binom(n - t, 2) + n * p + binom(p, 2)) - Fraction(p, 2) * (x - 1))
        assert lhs == level3_total_intersection(n, t, p)


@given(params)
def test_counting_max_k_respects_rational_bound(ntp):
    n, t, p = ntp
    assert max_k_from_counting("intersection", n, t, p) <= max(2, bound_thm1(n, t, p).floor)


def test_counting_flips():
    assert counting_feasible_intersection(6, 3, 3, 5)
    assert not counting_feasible_intersection(6, 3, 3, 6)
    assert counting_feasible_veronese(5, 2, 3)
    assert not counting_feasible_veronese(5, 2, 4)
    # hand substitution: 9(k-2) + 3C(k-1,2) + (21 - 3(k-1))(k-2) against 82 subsets
    assert counting_lhs_intersection(6, 3, 3, 5) == 72
    assert counting_lhs_intersection(6, 3, 3, 6) == 90
    assert level3_total_intersection(6, 3, 3) == 82
    # 10(k-2) + 2C(k-1,2) + (11 - 2(k-1))(k-2) against C(7,3) = 35
    assert counting_lhs_veronese(5, 2, 3) == 19
    assert counting_lhs_veronese(5, 2, 4) == 36


@pytest.mark.parametrize("t,p", [(1, 2), (3, 3), (2, 5), (10, 7)])
def test_threshold_matches_nested_radical(t, p):
    want = t - p / 2 + p * sqrt(1 + (p * p - 4) / (3 * t * (t + p)))
    assert float(threshold_n0(t, p)) == pytest.approx(want, rel=1e-12)


def test_n0_condition_edges():
    assert threshold_n0(5, 2) == 6
    assert n0_condition(6, 5, 2)
    assert not n0_condition(5, 5, 2)
    for t in range(1, 12):
        for p in range(2, 12):
            x = float(threshold_n0(t, p))
            for n in range(t + 1, t + 15):
                if abs(n - x) > 1e-9:
                    assert n0_condition(n, t, p) == (n > x)


def test_veronese_discriminant_is_nonnegative_where_claimed():
    for p in range(2, 30):
        for n in range(max(2, p - 1), 100):
            assert discriminant_veronese(n, p) >= 0


def test_root_bound_not_applicable_below_p_minus_one():
    assert not bound_thm4(2, 5).applicable
    assert bound_thm4(4, 5).applicable


def test_caps():
    assert cap_intersection(6, 3) == 7
    assert floor_surd(Surd(cap_intersection(7, 3))) == 7


def test_bound_value_json_round_trip():
    for b in (bound_thm1(6, 3, 3), bound_thm2(7, 3, 5), bound_thm4(2, 5)):
        assert BoundValue.from_json(b.tag, b.to_json()) == b


@pytest.mark.parametrize("call", [lambda: bound_thm1(3, 3, 2), lambda: bound_thm1(5, 2, 1), lambda: bound_thm3(1, 2),
                                  lambda: bound_iterated_adjoin(3, -1), lambda: max_k_from_counting("cube", 1)])
def test_parameter_errors(call):
    with pytest.raises(ParameterError):
        call()
