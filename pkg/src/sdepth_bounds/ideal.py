"""Squarefree monomial ideals encoded as antichains of variable bitmasks.

Variable ``x_i`` (1-based) is bit ``i - 1`` of a mask, so sorting masks as
integers agrees with sorting the corresponding index sets colexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParameterError

MAX_VARS = 64


@dataclass(frozen=True, order=False)
class VarSet:
    """A set of variable indices, i.e. the support of a squarefree monomial."""

    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask.bit_length() > MAX_VARS:
            raise ParameterError(f"mask {self.mask:#x} outside 64 variables")

    @classmethod
    def of(cls, *indices: int) -> VarSet:
        return cls.from_indices(indices)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> VarSet:
        mask = 0
        for i in indices:
            if not 1 <= i <= MAX_VARS:
                raise ParameterError(f"variable index {i} outside 1..{MAX_VARS}")
            mask |= 1 << (i - 1)
        return cls(mask)

    def indices(self) -> tuple[int, ...]:
        m, out, i = self.mask, [], 1
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: VarSet) -> VarSet:
        return VarSet(self.mask | other.mask)

    def __and__(self, other: VarSet) -> VarSet:
        return VarSet(self.mask & other.mask)

    def issubset(self, other: VarSet) -> bool:
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def sort_key(self) -> tuple[int, int]:
        return (len(self), self.mask)

    def __str__(self) -> str:
        return ",".join(map(str, self.indices()))

    def __repr__(self) -> str:
        return f"VarSet({{{self}}})"


def minimalize(gens: Sequence[VarSet]) -> list[VarSet]:
    """Minimal antichain generating the same up-set, sorted by (size, mask)."""
    if not gens:
        raise ParameterError("cannot minimalize an empty generator list")
    out: list[VarSet] = []
    for g in sorted(set(gens), key=VarSet.sort_key):
        if not any(h.issubset(g) for h in out):
            out.append(g)
    return out


@dataclass(frozen=True)
class SquarefreeIdeal:
    n_vars: int
    gens: tuple[VarSet, ...]

    def __post_init__(self):
        if not 0 < self.n_vars <= MAX_VARS:
            raise ParameterError(f"n_vars={self.n_vars} outside 1..{MAX_VARS}")
        if not self.gens:
            raise ParameterError("an ideal needs at least one generator")
        full = (1 << self.n_vars) - 1
        for g in self.gens:
            if g.mask == 0:
                raise ParameterError("generators must be nonempty")
            if g.mask & ~full:
                raise ParameterError(f"generator {{{g}}} uses a variable beyond x_{self.n_vars}")
        gens = tuple(minimalize(self.gens))
        if len(gens) != len(self.gens):
            raise ParameterError("generators are not an antichain; use from_gens to minimalize")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_gens(cls, n_vars: int, gens: Iterable[VarSet | Iterable[int]]) -> SquarefreeIdeal:
        vs = [g if isinstance(g, VarSet) else VarSet.from_indices(g) for g in gens]
        return cls(n_vars, tuple(minimalize(vs)))

    @property
    def min_degree(self) -> int:
        return min(len(g) for g in self.gens)

    def contains(self, a: VarSet | int) -> bool:
        m = a.mask if isinstance(a, VarSet) else a
        return any(g.mask & ~m == 0 for g in self.gens)

    def __str__(self) -> str:
        body = "; ".join(" ".join(map(str, g.indices())) for g in self.gens)
        return f"<{self.n_vars} vars: {body}>"


def contains(ideal: SquarefreeIdeal, a: VarSet) -> bool:
    return ideal.contains(a)


def make_two_prime_intersection(n: int, t: int) -> SquarefreeIdeal:
    """The ideal ``(x_1..x_t) ∩ (x_{t+1}..x_n)``, generated by the cross products."""
    if not 1 <= t < n <= MAX_VARS:
        raise ParameterError(f"need 1 <= t < n <= {MAX_VARS}, got n={n}, t={t}")
    gens = [VarSet.of(i, j) for i in range(1, t + 1) for j in range(t + 1, n + 1)]
    return SquarefreeIdeal(n, tuple(minimalize(gens)))


def make_veronese(n: int, d: int) -> SquarefreeIdeal:
    """Squarefree Veronese ideal: all squarefree monomials of degree ``d`` in ``n`` variables."""
    if not 1 <= d <= n <= MAX_VARS:
        raise ParameterError(f"need 1 <= d <= n <= {MAX_VARS}, got n={n}, d={d}")
    gens = [VarSet.from_indices(c) for c in combinations(range(1, n + 1), d)]
    return SquarefreeIdeal(n, tuple(minimalize(gens)))


def adjoin_variables(ideal: SquarefreeIdeal, p: int) -> SquarefreeIdeal:
    """Add ``p`` fresh variables to the ring and to the ideal's generators."""
    if p < 0 or ideal.n_vars + p > MAX_VARS:
        raise ParameterError(f"cannot adjoin {p} variables to {ideal.n_vars}")
    n = ideal.n_vars
    extra = [VarSet.of(n + i) for i in range(1, p + 1)]
    return SquarefreeIdeal(n + p, tuple(minimalize(list(ideal.gens) + extra)))


def corollary_reduction(n: int, t: int, r: int) -> tuple[int, int, int]:
    """Map overlapping primes ``(x_1..x_t)``, ``(x_{r+1}..x_n)`` to two-prime-plus-variables form.

    The radical is ``((x_1..x_r) ∩ (x_{t+1}..x_n), x_{r+1}..x_t)``: a two-prime
    intersection on ``n - t + r`` variables split at ``r``, with the ``t - r``
    shared variables adjoined.
    """
    if not 1 <= r <= t < n:
        raise ParameterError(f"need 1 <= r <= t < n, got n={n}, t={t}, r={r}")
    return n - t + r, r, t - r


def overlapping_primes_radical(n: int, t: int, r: int) -> SquarefreeIdeal:
    """Radical of an intersection of primaries over ``(x_1..x_t)`` and ``(x_{r+1}..x_n)``.

    Built as the intersection of the two primes (product pairs, minimalized),
    with its variables in their original positions.
    """
    if not 1 <= r <= t < n:
        raise ParameterError(f"need 1 <= r <= t < n, got n={n}, t={t}, r={r}")
    left = range(1, t + 1)
    right = range(r + 1, n + 1)
    return SquarefreeIdeal.from_gens(n, [VarSet.of(i, j) for i in left for j in right])


# ---------------------------------------------------------------------------
# ideal spec mini-language

_FAMILIES = {
    "twoprime": ({"n", "t"}, {"p"}),
    "veronese": ({"n", "d"}, {"p"}),
    "primary": ({"n", "t", "r"}, set()),
}


@dataclass(frozen=True)
class IdealSpec:
    """Parsed form of ``family:key=value,...`` or ``gens:i j;k ...``."""

    family: str
    params: dict = field(default_factory=dict)
    gens: tuple[tuple[int, ...], ...] = ()
    text: str = ""

    def build(self) -> SquarefreeIdeal:
        f, q = self.family, self.params
        if f == "twoprime":
            ideal = make_two_prime_intersection(q["n"], q["t"])
        elif f == "veronese":
            ideal = make_veronese(q["n"], q["d"])
        elif f == "gens":
            n = q.get("n") or max(max(g) for g in self.gens)
            return SquarefreeIdeal.from_gens(n, self.gens)
        elif f == "primary":
            return overlapping_primes_radical(q["n"], q["t"], q["r"])
        else:  # pragma: no cover - guarded by the parser
            raise ParameterError(f"unknown family {f}")
        return adjoin_variables(ideal, q.get("p", 0))

    def __str__(self) -> str:
        return self.text


_KV = re.compile(r"^([a-z]+)=(\d+)$")


def parse_ideal_spec(text: str) -> IdealSpec:
    """Parse ``twoprime:n=6,t=3,p=3``, ``veronese:n=5,d=2``, ``gens:1 2;3 4`` etc.

    ``gens`` accepts an optional leading ``n=<vars>;`` item to fix the ring size.
    """
    text = text.strip()
    family, sep, body = text.partition(":")
    if not sep:
        raise ParameterError(f"ideal spec {text!r} lacks 'family:'")
    family = family.strip().lower()
    if family == "gens":
        gens, params = [], {}
        for item in body.split(";"):
            item = item.strip()
            if not item:
                continue
            m = _KV.match(item)
            if m and m.group(1) == "n":
                params["n"] = int(m.group(2))
                continue
            try:
                gens.append(tuple(int(tok) for tok in item.split()))
            except ValueError:
                raise ParameterError(f"bad generator {item!r} in {text!r}") from None
        if not gens:
            raise ParameterError(f"no generators in {text!r}")
        return IdealSpec("gens", params, tuple(gens), text)
    if family not in _FAMILIES:
        raise ParameterError(f"unknown ideal family {family!r}")
    required, optional = _FAMILIES[family]
    params = {}
    for item in filter(None, (s.strip() for s in body.split(","))):
        m = _KV.match(item)
        if not m:
            raise ParameterError(f"bad parameter {item!r} in {text!r}")
        key = m.group(1)
        if key not in required | optional:
            raise ParameterError(f"unexpected parameter {key!r} for {family}")
        params[key] = int(m.group(2))
    missing = required - params.keys()
    if missing:
        raise ParameterError(f"{family} needs {', '.join(sorted(missing))}")
    return IdealSpec(family, params, (), text)
