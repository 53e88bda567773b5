#!/usr/bin/env python3
"""Exact Stanley depth against every applicable closed-form bound, as CSV.

Example:
    python scripts/bound_soundness_sweep.py --max-vars 9 --p 2 3 > sweep.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from sdepth_bounds.bounds import bound_thm1, bound_thm2, bound_thm3, bound_thm4
from sdepth_bounds.errors import SearchTimeout
from sdepth_bounds.ideal import adjoin_variables, make_two_prime_intersection, make_veronese
from sdepth_bounds.poset import sdepth_exact


def cases(max_vars: int, ps: list[int]):
    for p in ps:
        for n in range(2, max_vars - p + 1):
            for t in range(1, n):
                yield "twoprime", (n, t, p), make_two_prime_intersection(n, t), (bound_thm1(n, t, p), bound_thm2(n, t, p))
            yield "veronese", (n, 0, p), make_veronese(n, 2), (bound_thm3(n, p), bound_thm4(n, p))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-vars", type=int, default=9, help="largest n + p")
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--budget", type=float, default=600.0)
    args = ap.parse_args(argv)

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["family", "n", "t", "p", "sdepth", "bound_a", "bound_b", "sound", "seconds"])
    violations = 0
    for family, (n, t, p), ideal, bounds in cases(args.max_vars, args.p):
        t0 = time.perf_counter()
        try:
            k = sdepth_exact(adjoin_variables(ideal, p), budget=args.budget).k
        except SearchTimeout as exc:
            k = f">={exc.feasible_k}"
        floors = [b.floor if b.applicable else None for b in bounds]
        sound = isinstance(k, str) or all(f is None or k <= f for f in floors)
        violations += not sound
        out.writerow([family, n, t or "", p, k, *("n/a" if f is None else f for f in floors),
                      str(sound).lower(), f"{time.perf_counter() - t0:.2f}"])
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
