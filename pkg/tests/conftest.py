from __future__ import annotations

from itertools import combinations

import pytest


def antichains(n: int):
    """Every nonempty antichain of nonempty subsets of ``{1..n}``, as bitmasks."""
    subsets = list(range(1, 1 << n))

    def rec(i, chosen):
        if i == len(subsets):
            if chosen:
                yield list(chosen)
            return
        yield from rec(i + 1, chosen)
        s = subsets[i]
        if all(s & c != c and s & c != s for c in chosen):
            chosen.append(s)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


@pytest.fixture(scope="session")
def small_antichains():
    return [(n, gens) for n in range(1, 5) for gens in antichains(n)]


def pairs(n):
    return list(combinations(range(1, n + 1), 2))
