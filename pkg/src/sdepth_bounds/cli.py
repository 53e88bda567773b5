"""Command-line interface: ``sdepth-bounds {bound,sdepth,compare,scan,verify-paper}``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import report
from .errors import ParameterError, ResourceLimitError, SearchTimeout
from .grid import parse_ranges, run_scan, scan_ok
from .ideal import parse_ideal_spec
from .poset import DEFAULT_BUDGET, DEFAULT_CAP, dump_witness, sdepth_exact
from .verify import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    spec: Optional[str] = None
    ranges: list[str] = field(default_factory=list)
    predicate: Optional[str] = None
    fmt: str = "table"
    budget: Optional[float] = DEFAULT_BUDGET
    cap: int = DEFAULT_CAP
    threads: int = 1
    out: Optional[Path] = None
    only: Optional[str] = None
    base: Optional[int] = None

    def __post_init__(self):
        if self.budget is not None and self.budget <= 0:
            raise ParameterError("--budget must be positive")
        if self.threads < 1:
            raise ParameterError("--threads must be at least 1")
        if self.cap < 1:
            raise ParameterError("--cap must be at least 1")


def _common(fmt_default: str) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "table"), default=fmt_default)
    p.add_argument("--out", type=Path, help="write output to this file instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdepth-bounds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    table, csvfmt = _common("table"), _common("csv")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="seconds per decision target")
    search.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest number of variables searched")
    search.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("bound", parents=[table], help="evaluate every applicable upper bound")
    p.add_argument("spec", help="e.g. twoprime:n=6,t=3,p=3 or veronese:n=11,d=2,p=6")
    p.add_argument("--base", type=int, help="known sdepth before adjoining, for the iterated bound")

    p = sub.add_parser("sdepth", parents=[table, search], help="exact Stanley depth with a witness partition")
    p.add_argument("spec")
    p.add_argument("--witness", type=Path, help="witness file (default: <out>.witness, or stdout)")

    p = sub.add_parser("compare", parents=[table], help="which of the two closed-form bounds is smaller")
    p.add_argument("spec")

    p = sub.add_parser("scan", parents=[csvfmt], help="evaluate a predicate over a parameter grid")
    p.add_argument("predicate")
    p.add_argument("ranges", nargs="+", help="var=lo..hi, endpoints may use earlier variables")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("verify-paper", parents=[table, search], help="check the reference fixtures")
    p.add_argument("--only", help="run only the records with this fixture id")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        spec=getattr(ns, "spec", None),
        ranges=getattr(ns, "ranges", []) or [],
        predicate=getattr(ns, "predicate", None),
        fmt=ns.fmt,
        budget=getattr(ns, "budget", DEFAULT_BUDGET),
        cap=getattr(ns, "cap", DEFAULT_CAP),
        threads=getattr(ns, "threads", 1),
        out=ns.out,
        only=getattr(ns, "only", None),
        base=getattr(ns, "base", None),
    )


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def cmd_bound(cfg: RunConfig) -> tuple[str, int]:
    rep = report.bound_report(parse_ideal_spec(cfg.spec), cfg.base)
    if cfg.fmt == "json":
        return report.dumps(rep.to_json()), EXIT_OK
    if cfg.fmt == "csv":
        return report.to_csv([report.bound_csv_row(rep)]), EXIT_OK
    return report.render_bound_table(rep), EXIT_OK


def cmd_sdepth(cfg: RunConfig, witness: Optional[Path]) -> tuple[str, int]:
    spec = parse_ideal_spec(cfg.spec)
    ideal = spec.build()
    try:
        res = sdepth_exact(ideal, budget=cfg.budget, cap=cfg.cap, threads=cfg.threads)
    except SearchTimeout as exc:
        d = {"spec": cfg.spec, "status": "timeout", "lower": exc.feasible_k, "unknown": exc.unknown_k}
        return _render_flat(d, cfg.fmt), EXIT_RESOURCE
    wtext = dump_witness(res.witness, ideal.n_vars)
    if witness is None and cfg.out is not None:
        witness = cfg.out.with_name(cfg.out.name + ".witness")
    d = {"spec": cfg.spec, "status": "ok", "k": res.k, "witness": str(witness) if witness else None}
    if witness is not None:
        witness.write_text(wtext, encoding="utf-8")
        return _render_flat(d, cfg.fmt), EXIT_OK
    text = _render_flat(d, cfg.fmt)
    if cfg.fmt == "table":
        text += wtext
    return text, EXIT_OK


def _render_flat(d: dict, fmt: str) -> str:
    if fmt == "json":
        return report.dumps(d)
    if fmt == "csv":
        return report.to_csv([{k: report.cell(v) for k, v in d.items()}])
    return "".join(f"{k:<8} {report.cell(v)}\n" for k, v in d.items())


def cmd_compare(cfg: RunConfig) -> tuple[str, int]:
    d = report.compare_report(parse_ideal_spec(cfg.spec))
    if cfg.fmt == "json":
        return report.dumps(d), EXIT_OK
    if cfg.fmt == "csv":
        return report.to_csv([report.compare_csv_row(d)]), EXIT_OK
    return report.render_compare_table(d), EXIT_OK


def cmd_scan(cfg: RunConfig) -> tuple[str, int]:
    rows = run_scan(cfg.predicate, parse_ranges(cfg.ranges), cfg.threads)
    status = EXIT_OK if scan_ok(rows) else EXIT_FAIL
    if cfg.fmt == "json":
        return report.dumps(rows), status
    if cfg.fmt == "csv":
        return report.to_csv(rows), status
    cols = list(rows[0])
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) for c in cols]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(str(r[c]).rjust(w) for c, w in zip(cols, widths)) for r in rows]
    return "\n".join(lines) + "\n", status


def cmd_verify_paper(cfg: RunConfig) -> tuple[str, int]:
    records = verify(cfg.only, budget=cfg.budget, cap=cfg.cap)
    status = EXIT_OK if all(r.passed for r in records) else EXIT_FAIL
    if cfg.fmt == "json":
        return report.dumps([r.to_json() for r in records]), status
    rows = [{k: report.cell(v) if not isinstance(v, str) else v for k, v in r.to_json().items()} for r in records]
    if cfg.fmt == "csv":
        return report.to_csv(rows), status
    lines = []
    for r in records:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.id:<14} {r.target}")
        lines.append(f"      expected {r.expected}")
        lines.append(f"      computed {r.computed}")
        lines.append(f"      source   {r.source}")
    passed = sum(r.passed for r in records)
    lines.append(f"{passed}/{len(records)} records pass")
    return "\n".join(lines) + "\n", status


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(ns)
        if cfg.command == "bound":
            text, code = cmd_bound(cfg)
        elif cfg.command == "sdepth":
            text, code = cmd_sdepth(cfg, ns.witness)
        elif cfg.command == "compare":
            text, code = cmd_compare(cfg)
        elif cfg.command == "scan":
            text, code = cmd_scan(cfg)
        else:
            text, code = cmd_verify_paper(cfg)
    except (ResourceLimitError, SearchTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, cfg.out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
