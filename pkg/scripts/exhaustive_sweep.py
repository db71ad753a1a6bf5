"""Exhaustive oracle cross-validation over all labeled graphs on n vertices.

Usage: python scripts/exhaustive_sweep.py [--n 6] [--witnesses]
"""

import argparse
import sys
import time
from collections import Counter

from urmatch.matching import maximum_matching
from urmatch.oracle import enumerate_labeled_graphs, oracle_every_ur, oracle_some_ur
from urmatch.recognition import every_ur, some_ur
from urmatch.ur_core import is_uniquely_restricted


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6, help="vertex count (exhaustive, keep <= 6)")
    ap.add_argument("--witnesses", action="store_true", help="also validate every witness")
    args = ap.parse_args()
    if args.n > 6:
        print("refusing n > 6: 2^(n choose 2) graphs is no longer desk scale", file=sys.stderr)
        return 2

    t0 = time.perf_counter()
    total = mismatches = bad_witnesses = yes = 0
    tags = Counter()
    for g in enumerate_labeled_graphs(args.n):
        total += 1
        rs = some_ur(g)
        re_ = every_ur(g)
        if rs.answer != oracle_some_ur(g) or re_.answer != oracle_every_ur(g):
            mismatches += 1
            print(f"MISMATCH edges={sorted(g.edges)}", file=sys.stderr)
        if rs.answer:
            yes += 1
            if args.witnesses:
                w = rs.witness
                if w is None or len(w.edges) != len(maximum_matching(g)) \
                        or not is_uniquely_restricted(g, w):
                    bad_witnesses += 1
        else:
            tags[rs.failure] += 1
    elapsed = time.perf_counter() - t0
    print(f"n={args.n}: {total} graphs, {mismatches} mismatches, "
          f"{yes} yes-instances, {bad_witnesses} bad witnesses, {elapsed:.1f}s")
    print("failure tags:", dict(tags))
    return 0 if mismatches == 0 and bad_witnesses == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
