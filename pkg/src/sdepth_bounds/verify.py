"""Check the reference fixtures in ``fixtures.txt`` against the implementation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from .bounds import counting_feasible_intersection, counting_feasible_veronese
from .comparison import thm5_case_thresholds
from .errors import ParameterError
from .grid import parse_ranges, run_scan, scan_ok
from .ideal import parse_ideal_spec
from .poset import DEFAULT_BUDGET, DEFAULT_CAP, sdepth_exact
from .report import bound_report
from .surd import Surd

APPROX_TOL = Fraction(1, 100)
_EXPECT = re.compile(r"^\s*([\w.]+)\s*(<=|=|~)\s*(\S+)\s*$")


@dataclass(frozen=True)
class Fixture:
    id: str
    target: str
    expected: str
    source: str


@dataclass(frozen=True)
class VerificationRecord:
    id: str
    target: str
    expected: str
    computed: str
    source: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "target": self.target,
            "expected": self.expected,
            "computed": self.computed,
            "source": self.source,
            "pass": self.passed,
        }


def parse_manifest(text: str) -> list[Fixture]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [s.strip() for s in line.split("|")]
        if len(parts) != 4:
            raise ParameterError(f"fixtures line {lineno}: expected 4 '|'-separated fields")
        out.append(Fixture(*parts))
    return out


def load_fixtures() -> list[Fixture]:
    text = resources.files(__package__).joinpath("fixtures.txt").read_text(encoding="utf-8")
    return parse_manifest(text)


def _fmt(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _compute(target: str, budget: Optional[float], cap: int) -> dict:
    """Evaluate a fixture target into a ``field -> value`` mapping."""
    kind, _, rest = target.partition(" ")
    rest = rest.strip()
    if kind == "bound":
        base = None
        m = re.search(r"\s+base=(\d+)$", rest)
        if m:
            base, rest = int(m.group(1)), rest[: m.start()]
        rep = bound_report(parse_ideal_spec(rest), base)

        class _View(dict):
            def __missing__(self, key):
                return rep.lookup(key)

        return _View()
    if kind == "sdepth":
        res = sdepth_exact(parse_ideal_spec(rest).build(), budget=budget, cap=cap)
        return {"k": res.k}
    if kind == "thresholds":
        p = int(rest.removeprefix("p="))
        return {f"n{i}": thm5_case_thresholds(p, res)[1] for i, res in ((1, 1), (2, 2), (3, 0))}
    if kind == "counting":
        family, *nums = rest.split()
        args = [int(x) for x in nums]
        fn = {"intersection": counting_feasible_intersection, "veronese": counting_feasible_veronese}[family]

        class _Counts(dict):
            def __missing__(self, key):
                return fn(*args, int(key.removeprefix("k")))

        return _Counts()
    if kind == "scan":
        name, *ranges = rest.split()
        return {"all": scan_ok(run_scan(name, parse_ranges(ranges)))}
    raise ParameterError(f"unknown fixture target {target!r}")


def _as_number(v) -> Fraction | Surd:
    if isinstance(v, Surd):
        return v
    return Fraction(v)


def _check(value, op: str, want: str) -> bool:
    if op == "=":
        return _fmt(value) == want
    if value is None or isinstance(value, bool):
        return False
    x = _as_number(value)
    if op == "<=":
        return x <= Fraction(want)
    return abs(Fraction(float(x)) - Fraction(want)) <= APPROX_TOL


def run_fixture(fx: Fixture, budget: Optional[float] = DEFAULT_BUDGET, cap: int = DEFAULT_CAP) -> VerificationRecord:
    values = _compute(fx.target, budget, cap)
    computed, ok = [], True
    for item in filter(None, (s.strip() for s in fx.expected.split(";"))):
        m = _EXPECT.match(item)
        if not m:
            raise ParameterError(f"fixture {fx.id}: bad expectation {item!r}")
        key, op, want = m.groups()
        value = values[key]
        shown = _fmt(value)
        if op == "~" and isinstance(value, Surd):
            shown = f"{float(value):.6f}"
        computed.append(f"{key}={shown}")
        ok = ok and _check(value, op, want)
    return VerificationRecord(fx.id, fx.target, fx.expected, "; ".join(computed), fx.source, ok)


def verify(only: Optional[str] = None, budget: Optional[float] = DEFAULT_BUDGET, cap: int = DEFAULT_CAP) -> list[VerificationRecord]:
    fixtures = load_fixtures()
    if only is not None:
        fixtures = [fx for fx in fixtures if fx.id == only]
        if not fixtures:
            raise ParameterError(f"no fixture with id {only!r}")
    return [run_fixture(fx, budget, cap) for fx in fixtures]
