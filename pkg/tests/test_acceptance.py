"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the summary lines
inline (they are also printed with capture disabled).
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from conftest import antichains
from naive_oracle import naive_sdepth
from sdepth_bounds.bounds import (
    bound_corollary,
    bound_iterated_adjoin,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_thm4,
    counting_feasible_intersection,
    counting_feasible_veronese,
    n0_condition,
)
from sdepth_bounds.comparison import (
    case_matches_direct,
    lemma1_check,
    lemma3_check,
    lemma4_check,
    lemma_section4_ordering,
    thm2_le_thm1,
    thm4_beats_thm3,
    thm5_case_thresholds,
    thm6_internals,
    thm6_predicate,
)
from sdepth_bounds.errors import InvariantViolation
from sdepth_bounds.ideal import SquarefreeIdeal, VarSet, adjoin_variables, make_two_prime_intersection, make_veronese
from sdepth_bounds.poset import sdepth_exact


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str, elapsed: float):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}  ({elapsed:.2f}s)")

    return emit


def test_criterion_1_example_values(report):
    t0 = time.perf_counter()
    checks = {
        "thm1(6,3,3).floor=5": bound_thm1(6, 3, 3).floor == 5,
        "iterated(4,3)=7": bound_iterated_adjoin(4, 3) == 7,
        "thm2(7,3,5).floor=7": bound_thm2(7, 3, 5).floor == 7,
        "thm1(7,3,5).floor=8": bound_thm1(7, 3, 5).floor == 8,
        "thm2(66,2,3).floor=42": bound_thm2(66, 2, 3).floor == 42,
        "thm1(66,2,3).floor=41": bound_thm1(66, 2, 3).floor == 41,
        "corollary(8,6,4).floor=5": bound_corollary(8, 6, 4).floor == 5,
        "thm3(5,2).floor=4": bound_thm3(5, 2).floor == 4,
        "thm4(5,2).floor=3": bound_thm4(5, 2).floor == 3,
        "iterated(3,2)=5": bound_iterated_adjoin(3, 2) == 5,
        "thm3(11,6).floor=8": bound_thm3(11, 6).floor == 8,
        "thm4(11,6).floor=7": bound_thm4(11, 6).floor == 7,
        "iterated(5,6)=11": bound_iterated_adjoin(5, 6) == 11,
        "thm1(2,1,2)=10/3": bound_thm1(2, 1, 2).exact == Fraction(10, 3),
        "thm2(2,1,2)=3": bound_thm2(2, 1, 2).exact == 3,
    }
    elapsed = time.perf_counter() - t0
    bad = [k for k, v in checks.items() if not v]
    ok = not bad and elapsed < 1.0
    report(1, ok, f"{len(checks) - len(bad)}/{len(checks)} example values exact" + (f"; wrong: {bad}" if bad else ""), elapsed)
    assert ok


def test_criterion_2_exact_sdepth_values(report):
    cases = [
        ("veronese(5,2)", make_veronese(5, 2), lambda k: k == 3, "=3"),
        ("veronese(5,2)+2", adjoin_variables(make_veronese(5, 2), 2), lambda k: k == 3, "=3"),
        ("twoprime(6,3)+3", adjoin_variables(make_two_prime_intersection(6, 3), 3), lambda k: k <= 5, "<=5"),
    ]
    t_all = time.perf_counter()
    parts, ok = [], True
    for name, ideal, good, want in cases:
        t0 = time.perf_counter()
        k = sdepth_exact(ideal, budget=60).k
        dt = time.perf_counter() - t0
        this = good(k) and dt <= 60
        ok &= this
        parts.append(f"{name}={k} (want {want}, {dt:.1f}s)")
    report(2, ok, "; ".join(parts), time.perf_counter() - t_all)
    assert ok


def test_criterion_3_oracle_equivalence(report):
    t0 = time.perf_counter()
    total, mismatches = 0, []
    for n in range(1, 5):
        for gens in antichains(n):
            ideal = SquarefreeIdeal.from_gens(n, [VarSet(m) for m in gens])
            total += 1
            got, want = sdepth_exact(ideal).k, naive_sdepth(n, gens)
            if got != want:
                mismatches.append((n, gens, got, want))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed <= 300
    report(3, ok, f"{total} ideals on <=4 variables, {len(mismatches)} mismatches", elapsed)
    assert ok, mismatches[:5]


def test_criterion_4_bound_soundness(report):
    t0 = time.perf_counter()
    checked, violations = 0, []
    for p in (2, 3):
        for n in range(2, 7):
            if n + p > 9:
                continue
            for t in range(1, n):
                k = sdepth_exact(adjoin_variables(make_two_prime_intersection(n, t), p), budget=None).k
                for b in (bound_thm1(n, t, p), bound_thm2(n, t, p)):
                    if b.applicable:
                        checked += 1
                        if k > b.floor:
                            violations.append((b.tag, n, t, p, k, b.floor))
            k = sdepth_exact(adjoin_variables(make_veronese(n, 2), p), budget=None).k
            for b in (bound_thm3(n, p), bound_thm4(n, p)):
                if b.applicable:
                    checked += 1
                    if k > b.floor:
                        violations.append((b.tag, n, p, k, b.floor))
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed <= 1800
    report(4, ok, f"{checked} bound checks, {len(violations)} violations", elapsed)
    assert ok, violations


def test_criterion_5_veronese_comparison_grid(report):
    t0 = time.perf_counter()
    points, bad = 0, []
    for p in range(2, 31):
        for n in range(max(2, p - 1), 201):
            points += 1
            if not (thm4_beats_thm3(n, p) and case_matches_direct(n, p)):
                bad.append((n, p))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 60
    report(5, ok, f"{points} grid points, {len(bad)} exceptions", elapsed)
    assert ok, bad[:10]


def test_criterion_6_two_prime_biconditional(report):
    t0 = time.perf_counter()
    points, bad = 0, []
    for n in range(3, 41):
        for t in range(1, n):
            for p in range(2, 21):
                if not n0_condition(n, t, p):
                    continue
                points += 1
                try:
                    ints = thm6_internals(n, t, p)
                    ident = ints.h == ints.g4**2 * ints.D - ints.f4**2 == 4 * p**3 * ints.h1 * ints.h2
                except InvariantViolation:
                    ident = False
                if not ident or thm6_predicate(n, t, p) != thm2_le_thm1(n, t, p):
                    bad.append((n, t, p))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 120
    report(6, ok, f"{points} grid points with n >= n0, {len(bad)} exceptions", elapsed)
    assert ok, bad[:10]


def test_criterion_7_lemma_certificates(report):
    t0 = time.perf_counter()
    failures = []
    if not all(lemma1_check(n, t, p) for n in range(2, 41) for t in range(1, n) for p in range(2, 41)):
        failures.append("lemma1")
    if not all(lemma3_check(t, p) for t in range(1, 21) for p in range(2, 51)):
        failures.append("lemma3")
    if not all(lemma4_check(n, p) for n in range(3, 61) for p in range(2, n + 2)):
        failures.append("lemma4")
    if not all(lemma_section4_ordering(p) for p in range(3, 51)):
        failures.append("ordering")
    n1 = thm5_case_thresholds(2, 1)[1]
    n2 = float(thm5_case_thresholds(2, 2)[1])
    n3 = float(thm5_case_thresholds(2, 0)[1])
    if n1 != 1:
        failures.append(f"n1={n1}")
    if abs(n2 - 1.22) > 0.01:
        failures.append(f"n2={n2:.6f} vs 1.22")
    if abs(n3 - 1.07) > 0.01:
        failures.append(f"n3={n3:.6f} vs 1.07")
    elapsed = time.perf_counter() - t0
    ok = not failures
    detail = "all lemma grids and anchors hold" if ok else "failed: " + ", ".join(failures)
    report(7, ok, detail, elapsed)
    assert ok, detail


def test_criterion_8_counting_flips(report):
    t0 = time.perf_counter()
    ok = (
        counting_feasible_intersection(6, 3, 3, 5)
        and not counting_feasible_intersection(6, 3, 3, 6)
        and counting_feasible_veronese(5, 2, 3)
        and not counting_feasible_veronese(5, 2, 4)
    )
    report(8, ok, "intersection(6,3,3) flips at 5/6, veronese(5,2) flips at 3/4", time.perf_counter() - t0)
    assert ok
