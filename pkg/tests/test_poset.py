from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from naive_oracle import naive_sdepth
from sdepth_bounds import poset as poset_mod
from sdepth_bounds.errors import ParameterError, ResourceLimitError, SearchTimeout
from sdepth_bounds.ideal import SquarefreeIdeal, VarSet, adjoin_variables, make_two_prime_intersection, make_veronese
from sdepth_bounds.poset import (
    Interval,
    IntervalPartition,
    build_poset,
    dump_witness,
    is_valid_partition,
    level_counting_feasible,
    parse_witness,
    sdepth_decision,
    sdepth_exact,
    validate_partition,
)


def ideal_of(n, masks):
    return SquarefreeIdeal.from_gens(n, [VarSet(m) for m in masks])


def test_poset_levels():
    p = build_poset(make_veronese(4, 2))
    assert [len(level) for level in p.levels] == [0, 0, 6, 4, 1]
    assert p.members.bit_count() == 11


def test_cap_enforced():
    with pytest.raises(ResourceLimitError):
        build_poset(make_veronese(6, 2), cap=5)


def test_principal_ideal():
    res = sdepth_exact(SquarefreeIdeal.from_gens(2, [[1, 2]]))
    assert res.k == 2


def test_small_oracle_agreement(small_antichains):
    for n, gens in small_antichains:
        if n > 3:
            continue
        assert sdepth_exact(ideal_of(n, gens)).k == naive_sdepth(n, gens), (n, gens)


def test_witness_is_valid_and_round_trips():
    ideal = adjoin_variables(make_veronese(5, 2), 2)
    res = sdepth_exact(ideal)
    p = build_poset(ideal)
    assert validate_partition(p, res.witness) is None
    text = dump_witness(res.witness, ideal.n_vars)
    back, n = parse_witness(text)
    assert n == ideal.n_vars and back == res.witness
    assert dump_witness(back, n) == text


def test_validate_rejects_bad_partitions():
    ideal = make_veronese(3, 2)
    p = build_poset(ideal)
    iv = lambda lo, hi: Interval(VarSet.from_indices(lo), VarSet.from_indices(hi))  # noqa: E731
    good = IntervalPartition((iv([1, 2], [1, 2, 3]), iv([1, 3], [1, 3]), iv([2, 3], [2, 3])), 2)
    assert is_valid_partition(p, good)
    overlap = IntervalPartition((iv([1, 2], [1, 2, 3]), iv([1, 3], [1, 2, 3]), iv([2, 3], [2, 3])), 2)
    assert validate_partition(p, overlap) is not None
    missing = IntervalPartition((iv([1, 2], [1, 2, 3]), iv([1, 3], [1, 3])), 2)
    assert validate_partition(p, missing) is not None
    outside = IntervalPartition((iv([1], [1, 2]),) + good.intervals[1:], 2)
    assert validate_partition(p, outside) is not None


def test_counting_is_a_sound_prune(small_antichains):
    for n, gens in small_antichains:
        ideal = ideal_of(n, gens)
        true_k = naive_sdepth(n, gens)
        for k in range(1, n + 1):
            if not level_counting_feasible(ideal, k):
                assert true_k < k, (n, gens, k)


def test_adjoining_a_variable_raises_sdepth_by_at_most_one(small_antichains):
    for n, gens in small_antichains:
        ideal = ideal_of(n, gens)
        base = sdepth_exact(ideal).k
        bigger = sdepth_exact(adjoin_variables(ideal, 1)).k
        assert bigger <= base + 1, (n, gens)


def test_known_values():
    assert sdepth_exact(make_veronese(5, 2)).k == 3
    assert sdepth_exact(adjoin_variables(make_two_prime_intersection(2, 1), 2)).k == 3
    assert sdepth_exact(adjoin_variables(make_two_prime_intersection(3, 1), 3)).k == 4


def test_parallel_matches_serial():
    ideal = adjoin_variables(make_two_prime_intersection(4, 2), 2)
    for k in range(2, 6):
        a = sdepth_decision(ideal, k)
        b = sdepth_decision(ideal, k, threads=2)
        assert (a is None) == (b is None)
        if b is not None:
            assert is_valid_partition(build_poset(ideal), b)


def test_decision_target_range():
    with pytest.raises(ParameterError):
        sdepth_decision(make_veronese(3, 2), 0)
    with pytest.raises(ParameterError):
        sdepth_decision(make_veronese(3, 2), 4)


def test_timeout_reports_bracket(monkeypatch):
    monkeypatch.setattr(poset_mod, "_CLOCK_EVERY", 1)
    ideal = adjoin_variables(make_veronese(6, 2), 2)
    with pytest.raises(SearchTimeout) as info:
        sdepth_exact(ideal, budget=1e-9)
    assert info.value.feasible_k == ideal.min_degree
    assert info.value.unknown_k == ideal.min_degree + 1


@st.composite
def random_ideals(draw, max_vars=6):
    n = draw(st.integers(2, max_vars))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6))
    return SquarefreeIdeal.from_gens(n, [VarSet(m) for m in masks])


@settings(max_examples=60, deadline=None)
@given(random_ideals())
def test_exact_value_is_tight(ideal):
    res = sdepth_exact(ideal)
    assert is_valid_partition(build_poset(ideal), res.witness)
    assert res.witness.k == res.k
    if res.k < ideal.n_vars:
        assert sdepth_decision(ideal, res.k + 1) is None
