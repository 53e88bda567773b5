#!/usr/bin/env python3
"""Print which of the two two-prime bounds is smaller across (n, p), per t.

One character per cell: ``2`` root bound strictly smaller, ``1`` rational
bound strictly smaller, ``=`` tie, ``.`` root bound unavailable.
"""

from __future__ import annotations

import argparse

from sdepth_bounds.comparison import thm2_le_thm1, thm6_internals
from sdepth_bounds.surd import cmp_surd


def cell(n: int, t: int, p: int) -> str:
    if thm2_le_thm1(n, t, p) is None:
        return "."
    ints = thm6_internals(n, t, p)
    c = cmp_surd(ints.lower, ints.upper)
    return "2" if c < 0 else "1" if c > 0 else "="


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--p-max", type=int, default=20)
    ap.add_argument("--t", type=int, nargs="+", default=[1, 2, 3])
    args = ap.parse_args(argv)
    for t in args.t:
        print(f"t = {t}   (rows p = 2..{args.p_max}, columns n = {t + 1}..{args.n_max})")
        for p in range(2, args.p_max + 1):
            print(f"{p:>3} " + "".join(cell(n, t, p) for n in range(t + 1, args.n_max + 1)))
        print()


if __name__ == "__main__":
    main()
