#!/usr/bin/env python3
"""Census of the connected (P6,C4)-free graphs, order by order.

Counts isomorphism classes per order, how many contain an induced
five-cycle, how many have no clique cutset, and how many are 3- and
4-colorable — the denominators quoted in the test suite and the README.

    python3 scripts/family_census.py --max-n 9
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from p6c4 import coloring, enumeration, structure


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    cfg = enumeration.p6c4_config(n_max=args.max_n, workers=args.workers)
    rows: dict[int, dict[str, int]] = {}
    t0 = time.time()
    for g in enumeration.enumerate_family(cfg):
        row = rows.setdefault(
            g.n, {"classes": 0, "with_c5": 0, "no_cutset": 0, "3col": 0, "4col": 0}
        )
        row["classes"] += 1
        if structure.find_all_c5(g):
            row["with_c5"] += 1
        if structure.find_clique_cutset(g) is None:
            row["no_cutset"] += 1
        if coloring.k_color(g, 3) is not None:
            row["3col"] += 1
        if coloring.k_color(g, 4) is not None:
            row["4col"] += 1

    print(f"{'n':>2} {'classes':>8} {'with C5':>8} {'no cutset':>9} {'3-col':>7} {'4-col':>7}")
    for n in sorted(rows):
        r = rows[n]
        print(
            f"{n:>2} {r['classes']:>8} {r['with_c5']:>8} {r['no_cutset']:>9} "
            f"{r['3col']:>7} {r['4col']:>7}"
        )
    print(f"total {sum(r['classes'] for r in rows.values())} classes "
          f"in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
