"""Randomized oracle cross-validation on Erdos-Renyi graphs.

Usage: python scripts/random_sweep.py [--count 5000] [--nmin 7] [--nmax 10] [--seed 0]
"""

import argparse
import random
import sys
import time

from urmatch.families import random_graph
from urmatch.oracle import oracle_every_ur, oracle_some_ur
from urmatch.recognition import every_ur, some_ur

PROBS = [0.2, 0.4, 0.6]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=5000)
    ap.add_argument("--nmin", type=int, default=7)
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if args.nmax > 12:
        print("refusing nmax > 12: the oracle enumeration blows up", file=sys.stderr)
        return 2

    rng = random.Random(args.seed)
    max_m = args.nmax * (args.nmax - 1) // 2
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(args.count):
        n = rng.randrange(args.nmin, args.nmax + 1)
        g = random_graph(n, rng.choice(PROBS), rng)
        if some_ur(g).answer != oracle_some_ur(g, max_n=args.nmax, max_m=max_m) or \
                every_ur(g).answer != oracle_every_ur(g, max_n=args.nmax, max_m=max_m):
            mismatches += 1
            print(f"MISMATCH n={n} edges={sorted(g.edges)}", file=sys.stderr)
    elapsed = time.perf_counter() - t0
    print(f"{args.count} graphs n in [{args.nmin},{args.nmax}], "
          f"{mismatches} mismatches, {elapsed:.1f}s")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
