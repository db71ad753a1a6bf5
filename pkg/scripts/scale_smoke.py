"""Timing probe for the polynomial deciders on large random graphs.

Usage: python scripts/scale_smoke.py [--n 1000] [--m 10000] [--seed 0]
"""

import argparse
import random
import time

from urmatch.decomposition import gallai_edmonds
from urmatch.families import random_graph_nm
from urmatch.recognition import every_ur, some_ur


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--m", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    g = random_graph_nm(args.n, args.m, random.Random(args.seed))
    t0 = time.perf_counter()
    ge = gallai_edmonds(g)
    t1 = time.perf_counter()
    rs = some_ur(g, ge=ge)
    t2 = time.perf_counter()
    re_ = every_ur(g, ge=ge)
    t3 = time.perf_counter()

    print(f"n={g.n} m={g.m} |D|={len(ge.d_set)} |A|={len(ge.a_set)} |C|={len(ge.c_set)}")
    print(f"decomposition {t1 - t0:.2f}s  some {t2 - t1:.2f}s  every {t3 - t2:.2f}s")
    print(f"some: {rs.answer} {rs.failure or ''}".rstrip())
    print(f"every: {re_.answer} {re_.failure or ''}".rstrip())


if __name__ == "__main__":
    main()
