"""Characteristic posets and exact Stanley depth via interval partitions.

A squarefree ideal ``I`` on ``n`` variables has Stanley depth ``>= k`` exactly
when its characteristic poset (the supports of squarefree monomials in ``I``)
can be split into intervals ``[C, D]`` with ``|D| >= k``.  Because the poset is
an up-set we may shrink every non-singleton interval until ``|D| == k``, so the
decision problem only has to cover the elements below level ``k``, each by an
interval topped at level ``k``; everything else becomes a singleton.

Poset elements are stored as masks and sets of elements as Python ints with bit
``m`` set for mask ``m``.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import ParameterError, ResourceLimitError, SearchTimeout
from .ideal import SquarefreeIdeal, VarSet

DEFAULT_CAP = 14
DEFAULT_BUDGET = 60.0
_CLOCK_EVERY = 2048


@dataclass(frozen=True)
class Interval:
    lo: VarSet
    hi: VarSet

    def __post_init__(self):
        if not self.lo.issubset(self.hi):
            raise ParameterError(f"interval bottom {{{self.lo}}} not inside top {{{self.hi}}}")

    def masks(self) -> Iterator[int]:
        return _interval_masks(self.lo.mask, self.hi.mask)

    def __str__(self) -> str:
        return f"{self.lo} -> {self.hi}"


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple[Interval, ...]
    k: int

    def __len__(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class CharacteristicPoset:
    ideal: SquarefreeIdeal
    levels: tuple[tuple[int, ...], ...]
    members: int

    @property
    def n_vars(self) -> int:
        return self.ideal.n_vars

    def __len__(self) -> int:
        return sum(len(lv) for lv in self.levels)

    def __contains__(self, a: VarSet | int) -> bool:
        m = a.mask if isinstance(a, VarSet) else a
        return bool((self.members >> m) & 1)

    def elements(self) -> Iterator[VarSet]:
        for lv in self.levels:
            for m in lv:
                yield VarSet(m)

    def minimal_elements(self) -> list[VarSet]:
        els = list(self.elements())
        return [a for a in els if not any(b != a and b.issubset(a) for b in els)]

    def level_bits(self, level: int) -> int:
        bits = 0
        if 0 <= level < len(self.levels):
            for m in self.levels[level]:
                bits |= 1 << m
        return bits


def _interval_masks(lo: int, hi: int) -> Iterator[int]:
    free = hi & ~lo
    sub = free
    while True:
        yield lo | sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def _interval_bits(lo: int, hi: int) -> int:
    bits = 0
    for m in _interval_masks(lo, hi):
        bits |= 1 << m
    return bits


def build_poset(ideal: SquarefreeIdeal, cap: int = DEFAULT_CAP) -> CharacteristicPoset:
    n = ideal.n_vars
    if n > cap:
        raise ResourceLimitError(
            f"characteristic poset on {n} variables exceeds the cap of {cap}; "
            f"raise the cap explicitly (2^{n} subsets are enumerated)"
        )
    levels: list[list[int]] = [[] for _ in range(n + 1)]
    members = 0
    gens = [g.mask for g in ideal.gens]
    for m in range(1 << n):
        if any(g & ~m == 0 for g in gens):
            levels[m.bit_count()].append(m)
            members |= 1 << m
    return CharacteristicPoset(ideal, tuple(tuple(lv) for lv in levels), members)


def validate_partition(poset: CharacteristicPoset, part: IntervalPartition) -> str | None:
    """Return None if ``part`` is a valid partition of ``poset``, else the reason."""
    covered = 0
    for iv in part.intervals:
        if iv.lo not in poset:
            return f"interval {iv} starts outside the poset"
        bits = _interval_bits(iv.lo.mask, iv.hi.mask)
        if bits & ~poset.members:
            return f"interval {iv} leaves the poset"
        if bits & covered:
            return f"interval {iv} overlaps an earlier interval"
        covered |= bits
    if covered != poset.members:
        missing = (poset.members & ~covered).bit_length() - 1
        return f"element {{{VarSet(missing)}}} is not covered"
    low = min((len(iv.hi) for iv in part.intervals), default=None)
    if low != part.k:
        return f"smallest top has size {low}, partition claims {part.k}"
    return None


def is_valid_partition(poset: CharacteristicPoset, part: IntervalPartition) -> bool:
    return validate_partition(poset, part) is None


def _counts_feasible(alpha: list[int], k: int) -> bool:
    """Level-counting necessary condition on available element counts ``alpha[0..k]``.

    Every available element below level ``k`` is either the bottom of a new
    interval or lies in one started lower down; an interval with bottom at level
    ``i`` takes ``C(k-i, j-i)`` elements from level ``j``.  This fixes the number
    of bottoms per level, which must be nonnegative, and each interval needs its
    own top at level ``k``.
    """
    beta = [0] * k
    for lvl in range(k):
        need = alpha[lvl]
        for i in range(lvl):
            if beta[i]:
                need -= beta[i] * comb(k - i, lvl - i)
        if need < 0:
            return False
        beta[lvl] = need
    return sum(beta) <= alpha[k]


def _variable_masks(n: int) -> list[int]:
    """For each variable, the element bitset of all masks containing it."""
    out = []
    for x in range(n):
        bits = 0
        for m in range(1 << n):
            if (m >> x) & 1:
                bits |= 1 << m
        out.append(bits)
    return out


def _local_counts_feasible(u: int, level_bits: list[int], var_bits: list[int], k: int) -> bool:
    """Counting on every variable's star.

    Restricting a normalized partition to the sets containing ``x`` leaves
    intervals ``[C + x, D]`` that still end at level ``k``, so the available
    elements containing ``x`` must pass the counting test one level down.
    """
    for vb in var_bits:
        w = u & vb
        alpha = [(w & level_bits[j]).bit_count() for j in range(1, k + 1)]
        if not _counts_feasible(alpha, k - 1):
            return False
    return True


def level_counting_feasible(
    ideal: SquarefreeIdeal,
    k: int,
    poset: CharacteristicPoset | None = None,
    cap: int = DEFAULT_CAP,
    local: bool = True,
) -> bool:
    """Necessary condition for ``sdepth(ideal) >= k`` from element counts per level.

    With ``local`` the test is repeated on the star of each variable.
    """
    if poset is None:
        poset = build_poset(ideal, cap)
    if k <= poset.ideal.min_degree:
        return True
    if k > ideal.n_vars:
        return False
    level_bits = [poset.level_bits(j) for j in range(k + 1)]
    alpha = [len(poset.levels[j]) for j in range(k + 1)]
    if not _counts_feasible(alpha, k):
        return False
    if local:
        return _local_counts_feasible(poset.members, level_bits, _variable_masks(ideal.n_vars), k)
    return True


class _Search:
    """Backtracking cover of the levels below ``k`` by intervals topped at level ``k``."""

    def __init__(self, poset: CharacteristicPoset, k: int, deadline: float | None):
        self.poset = poset
        self.n = poset.n_vars
        self.k = k
        self.deadline = deadline
        self.level_bits = [poset.level_bits(j) for j in range(k + 1)]
        self.low = next((j for j in range(k) if self.level_bits[j]), k)
        self.var_bits = _variable_masks(self.n)
        self._tops: dict[int, list[tuple[int, int]]] = {}
        self.nodes = 0

    def tops(self, c: int) -> list[tuple[int, int]]:
        got = self._tops.get(c)
        if got is None:
            free = [1 << i for i in range(self.n) if not (c >> i) & 1]
            need = self.k - c.bit_count()
            got = []
            for extra in _combinations_masks(free, need):
                d = c | extra
                got.append((d, _interval_bits(c, d)))
            got.sort()
            self._tops[c] = got
        return got

    def initial_state(self) -> int:
        u = 0
        for b in self.level_bits:
            u |= b
        return u

    def next_bottom(self, u: int) -> int | None:
        for j in range(self.low, self.k):
            x = u & self.level_bits[j]
            if x:
                return (x & -x).bit_length() - 1
        return None

    def feasible(self, u: int) -> bool:
        alpha = [(u & b).bit_count() for b in self.level_bits]
        if not _counts_feasible(alpha, self.k):
            return False
        return _local_counts_feasible(u, self.level_bits, self.var_bits, self.k)

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CLOCK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise SearchTimeout(f"search at k={self.k} ran out of time after {self.nodes} nodes")

    def run(self, u: int, first_choices: list[int] | None = None) -> list[tuple[int, int]] | None:
        """Depth-first search from uncovered set ``u``; returns chosen (C, D) pairs or None.

        ``first_choices`` restricts the tops tried for the first bottom (used to
        split work between processes).
        """
        c = self.next_bottom(u)
        if c is None:
            return []
        if not self.feasible(u):
            return None
        chosen: list[tuple[int, int, int]] = []
        frames: list[list] = [[c, 0, first_choices]]
        while frames:
            frame = frames[-1]
            c, i, allowed = frame
            cands = self.tops(c)
            picked = None
            while i < len(cands):
                d, bits = cands[i]
                i += 1
                if allowed is not None and d not in allowed:
                    continue
                if bits & u == bits:
                    self._tick()
                    nu = u ^ bits
                    if self.feasible(nu):
                        picked = (d, bits, nu)
                        break
            frame[1] = i
            if picked is None:
                frames.pop()
                if chosen:
                    _, _, bits = chosen.pop()
                    u |= bits
                continue
            d, bits, u = picked
            chosen.append((c, d, bits))
            nxt = self.next_bottom(u)
            if nxt is None:
                return [(c_, d_) for c_, d_, _ in chosen]
            frames.append([nxt, 0, None])
        return None


def _combinations_masks(bits: list[int], r: int) -> Iterator[int]:
    if r < 0 or r > len(bits):
        return
    if r == 0:
        yield 0
        return
    from itertools import combinations

    for combo in combinations(bits, r):
        yield sum(combo)


def _witness(poset: CharacteristicPoset, pairs: list[tuple[int, int]]) -> IntervalPartition:
    covered = 0
    intervals = []
    for c, d in pairs:
        covered |= _interval_bits(c, d)
        intervals.append(Interval(VarSet(c), VarSet(d)))
    rest = poset.members & ~covered
    while rest:
        low = rest & -rest
        m = low.bit_length() - 1
        intervals.append(Interval(VarSet(m), VarSet(m)))
        rest ^= low
    intervals.sort(key=lambda iv: (iv.lo.sort_key(), iv.hi.sort_key()))
    k = min(len(iv.hi) for iv in intervals)
    return IntervalPartition(tuple(intervals), k)


def _branch_worker(args):
    ideal, k, cap, tops, budget = args
    poset = build_poset(ideal, cap)
    deadline = None if budget is None else time.monotonic() + budget
    search = _Search(poset, k, deadline)
    try:
        pairs = search.run(search.initial_state(), first_choices=tops)
    except SearchTimeout:
        return "timeout"
    return pairs


def sdepth_decision(
    ideal: SquarefreeIdeal,
    k: int,
    *,
    budget: float | None = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    poset: CharacteristicPoset | None = None,
) -> IntervalPartition | None:
    """Find an interval partition with every top of size ``>= k``, or None if none exists.

    The witness is normalized: non-singleton intervals have tops of size exactly
    ``k`` and every leftover element is a singleton.  Its ``k`` field is the
    smallest top size, which exceeds the target only when no element sits
    below level ``k``.  Raises SearchTimeout if ``budget`` seconds elapse.
    """
    if not 1 <= k <= ideal.n_vars:
        raise ParameterError(f"target k={k} outside 1..{ideal.n_vars}")
    if poset is None:
        poset = build_poset(ideal, cap)
    deadline = None if budget is None else time.monotonic() + budget
    search = _Search(poset, k, deadline)
    u = search.initial_state()
    if not search.feasible(u):
        return None
    first = search.next_bottom(u)
    if threads > 1 and first is not None:
        pairs = _parallel_run(ideal, k, cap, search.tops(first), threads, budget)
    else:
        pairs = search.run(u)
    if pairs is None:
        return None
    return _witness(poset, pairs)


def _parallel_run(ideal, k, cap, first_tops, threads, budget):
    jobs = [(ideal, k, cap, [d], budget) for d, _ in first_tops]
    timed_out = False
    with multiprocessing.get_context("fork").Pool(threads) as pool:
        for result in pool.imap_unordered(_branch_worker, jobs):
            if result == "timeout":
                timed_out = True
            elif result is not None:
                pool.terminate()
                return result
    if timed_out:
        raise SearchTimeout(f"parallel search at k={k} ran out of time")
    return None


@dataclass(frozen=True)
class SdepthResult:
    k: int
    witness: IntervalPartition


def sdepth_exact(
    ideal: SquarefreeIdeal,
    *,
    budget: float | None = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
) -> SdepthResult:
    """Exact Stanley depth with a witness partition.

    Targets are tried upward from the smallest generator degree (always
    feasible) until the first infeasible one.  On timeout the raised
    SearchTimeout carries the verified bracket.
    """
    poset = build_poset(ideal, cap)
    k = ideal.min_degree
    best = _witness(poset, [])
    while k < ideal.n_vars:
        try:
            w = sdepth_decision(ideal, k + 1, budget=budget, cap=cap, threads=threads, poset=poset)
        except SearchTimeout as exc:
            raise SearchTimeout(
                f"sdepth of {ideal} is in [{k}, {ideal.n_vars}]; target {k + 1} timed out",
                feasible_k=k,
                unknown_k=k + 1,
            ) from exc
        if w is None:
            break
        k, best = k + 1, w
    assert best.k == k, (best.k, k)
    return SdepthResult(k, best)


# ---------------------------------------------------------------------------
# witness text format


def dump_witness(part: IntervalPartition, n_vars: int) -> str:
    lines = [f"k={part.k} n={n_vars}"]
    lines += [f"{iv.lo} -> {iv.hi}" for iv in part.intervals]
    return "\n".join(lines) + "\n"


def _parse_varset(text: str) -> VarSet:
    text = text.strip()
    if not text:
        raise ParameterError("empty variable set in witness")
    return VarSet.from_indices(int(tok) for tok in text.split(","))


def parse_witness(text: str) -> tuple[IntervalPartition, int]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParameterError("empty witness file")
    header = dict(item.split("=", 1) for item in lines[0].split())
    try:
        k, n = int(header["k"]), int(header["n"])
    except (KeyError, ValueError):
        raise ParameterError(f"bad witness header {lines[0]!r}") from None
    intervals = []
    for ln in lines[1:]:
        lo, sep, hi = ln.partition("->")
        if not sep:
            raise ParameterError(f"bad witness line {ln!r}")
        intervals.append(Interval(_parse_varset(lo), _parse_varset(hi)))
    return IntervalPartition(tuple(intervals), k), n
