#!/usr/bin/env python3
"""Timing sweep for bipartite concurrence as the matricization grows.

The minor count is C(N,2) * C(M,2), i.e. quartic in the subsystem dimension
for square [N, N] states, so this is the operation that bounds interactive
use.  Prints dimensions, minor count, wall time, and throughput.
"""

import argparse
import math
import sys
import time

import numpy as np

from qconc import bipartite_concurrence, make_state


def time_once(n: int, m: int, seed: int) -> tuple[float, float]:
    rng = np.random.default_rng(seed)
    size = n * m
    state = make_state([n, m], rng.standard_normal(size) + 1j * rng.standard_normal(size))
    start = time.perf_counter()
    report = bipartite_concurrence(state)
    return time.perf_counter() - start, report.value


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--dims", type=int, nargs="+", default=[4, 8, 12, 16, 24, 32],
        help="square subsystem dimensions N for [N, N] states",
    )
    parser.add_argument("--repeats", type=int, default=3, help="best-of timing")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'dims':>10} {'minors':>10} {'seconds':>9} {'minors/s':>11} {'value':>9}")
    for n in args.dims:
        minors = math.comb(n, 2) ** 2
        best, value = min(
            (time_once(n, n, args.seed) for _ in range(args.repeats)),
            key=lambda t: t[0],
        )
        rate = minors / best if best > 0 else float("inf")
        print(f"[{n:>3},{n:>3}] {minors:>10} {best:>9.4f} {rate:>11.3e} {value:>9.5f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
