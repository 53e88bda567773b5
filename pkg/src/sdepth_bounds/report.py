"""Bound and comparison reports with JSON, CSV and plain-table renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Optional

from .bounds import (
    BoundValue,
    bound_corollary,
    bound_iterated_adjoin,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_thm4,
    bound_veronese_base,
    cap_intersection,
    cap_veronese,
    max_k_from_counting,
)
from .comparison import thm6_predicate
from .ideal import IdealSpec
from .surd import Surd, cmp_surd, render_decimal

BOUND_KEYS = ("thm1", "thm2", "corollary", "thm3", "thm4")


@dataclass
class BoundReport:
    params: dict
    bounds: dict = field(default_factory=dict)
    caps: dict = field(default_factory=dict)
    iterated: Optional[int] = None
    veronese_base: Optional[int] = None
    counting_max_k: Optional[int] = None

    def bound(self, key: str) -> BoundValue:
        return self.bounds.get(key) or BoundValue.not_applicable(key)

    def to_json(self) -> dict:
        out = {"params": dict(self.params)}
        for key in BOUND_KEYS:
            out[key] = self.bound(key).to_json()
        out["iterated"] = self.iterated
        out["veronese_base"] = self.veronese_base
        out["counting_max_k"] = self.counting_max_k
        out["caps"] = {k: v.to_json() for k, v in self.caps.items()}
        return out

    @classmethod
    def from_json(cls, d: dict) -> BoundReport:
        bounds = {k: BoundValue.from_json(k, d[k]) for k in BOUND_KEYS if d[k]["applicable"]}
        caps = {k: Surd.from_json(v) for k, v in d["caps"].items()}
        return cls(dict(d["params"]), bounds, caps, d["iterated"], d["veronese_base"], d["counting_max_k"])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundReport):
            return NotImplemented
        return self.to_json() == other.to_json()

    def lookup(self, path: str):
        """Value for a dotted field name such as ``thm1.floor`` or ``iterated``."""
        head, _, tail = path.partition(".")
        if head in BOUND_KEYS:
            b = self.bound(head)
            if tail in ("", "applicable"):
                return b.applicable
            if not b.applicable:
                return None
            return getattr(b, tail)
        if head == "caps":
            return self.caps.get(tail)
        return getattr(self, head)


def bound_report(spec: IdealSpec, base: Optional[int] = None) -> BoundReport:
    q = spec.params
    rep = BoundReport(params={"family": spec.family, **q})
    p = q.get("p", 0)
    if spec.family == "twoprime":
        n, t = q["n"], q["t"]
        rep.caps["intersection"] = Surd(cap_intersection(n, p))
        if p >= 2:
            rep.bounds["thm1"] = bound_thm1(n, t, p)
            rep.bounds["thm2"] = bound_thm2(n, t, p)
            rep.counting_max_k = max_k_from_counting("intersection", n, t, p)
    elif spec.family == "veronese":
        n, d = q["n"], q["d"]
        if d == 2 and n >= 2:
            rep.veronese_base = bound_veronese_base(n)
            rep.caps["veronese"] = Surd(cap_veronese(n, p))
            if base is None:
                base = rep.veronese_base
            if p >= 2:
                rep.bounds["thm3"] = bound_thm3(n, p)
                rep.bounds["thm4"] = bound_thm4(n, p)
                rep.counting_max_k = max_k_from_counting("veronese", n, p)
    elif spec.family == "primary":
        rep.bounds["corollary"] = bound_corollary(q["n"], q["t"], q["r"])
    if base is not None:
        rep.iterated = bound_iterated_adjoin(base, p)
    return rep


def cell(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_bound_table(rep: BoundReport) -> str:
    head = " ".join(f"{k}={v}" for k, v in rep.params.items())
    lines = [head]
    for key in BOUND_KEYS:
        b = rep.bound(key)
        if key not in rep.bounds:
            continue
        if b.applicable:
            lines.append(f"  {key:<10} {render_decimal(b.exact):>16}  floor {b.floor}   exact {b.exact}")
        else:
            lines.append(f"  {key:<10} {'n/a':>16}")
    for name, val in rep.caps.items():
        lines.append(f"  cap:{name:<6} {render_decimal(val):>16}")
    lines.append(f"  iterated   {cell(rep.iterated):>16}")
    if rep.veronese_base is not None:
        lines.append(f"  base       {rep.veronese_base:>16}")
    lines.append(f"  counting_k {cell(rep.counting_max_k):>16}")
    return "\n".join(lines) + "\n"


CSV_PARAMS = ("family", "n", "t", "d", "p", "r")


def bound_csv_row(rep: BoundReport) -> dict:
    row = {k: cell(rep.params.get(k)) if k in rep.params else "" for k in CSV_PARAMS}
    for key in BOUND_KEYS:
        b = rep.bound(key)
        row[f"{key}_exact"] = str(b.exact) if b.applicable else "n/a"
        row[f"{key}_floor"] = cell(b.floor)
    row["iterated"] = cell(rep.iterated)
    row["counting_max_k"] = cell(rep.counting_max_k)
    return row


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: cell(v) if not isinstance(v, str) else v for k, v in row.items()})
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# compare


def _winner(a_key: str, a: BoundValue, b_key: str, b: BoundValue) -> tuple[str, str]:
    """Winner (smaller bound) by exact value and by floor; ``b`` may be inapplicable."""
    if not b.applicable:
        return a_key, a_key
    c = cmp_surd(b.exact, a.exact)
    exact = b_key if c < 0 else a_key if c > 0 else "tie"
    floor = b_key if b.floor < a.floor else a_key if b.floor > a.floor else "tie"
    return exact, floor


def compare_report(spec: IdealSpec) -> dict:
    q = spec.params
    p = q.get("p", 0)
    if spec.family == "twoprime":
        n, t = q["n"], q["t"]
        b1, b2 = bound_thm1(n, t, p), bound_thm2(n, t, p)
        win_exact, win_floor = _winner("thm1", b1, "thm2", b2)
        return {
            "n": n,
            "t": t,
            "p": p,
            "thm1_floor": b1.floor,
            "thm2": {"applicable": b2.applicable, "floor": b2.floor},
            "winner_exact": win_exact,
            "winner_floor": win_floor,
            "thm6_predicate": thm6_predicate(n, t, p),
        }
    if spec.family == "veronese" and q["d"] == 2:
        n = q["n"]
        b3, b4 = bound_thm3(n, p), bound_thm4(n, p)
        win_exact, win_floor = _winner("thm3", b3, "thm4", b4)
        return {
            "n": n,
            "p": p,
            "thm3_floor": b3.floor,
            "thm4": {"applicable": b4.applicable, "floor": b4.floor},
            "winner_exact": win_exact,
            "winner_floor": win_floor,
        }
    raise ValueError(f"compare needs twoprime:... or veronese:...,d=2 with p >= 2, got {spec}")


def render_compare_table(d: dict) -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            v = ", ".join(f"{kk}={cell(vv)}" for kk, vv in v.items())
        lines.append(f"{k:<16} {cell(v)}")
    return "\n".join(lines) + "\n"


def compare_csv_row(d: dict) -> dict:
    row = {}
    for k, v in d.items():
        if isinstance(v, dict):
            for kk, vv in v.items():
                row[f"{k}_{kk}"] = cell(vv)
        else:
            row[k] = cell(v)
    return row
