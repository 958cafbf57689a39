"""Time the compiled cluster-histogram kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--graphs C:12,Wh:9,...]
"""

from __future__ import annotations

import argparse
import time

from wchrom.graph import family
from wchrom.kernels import cluster_histogram, compiled_available


def best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--graphs", default="C:16,Wh:9,K:6,sqcyc:2x8,sqcyc:3x5")
    args = ap.parse_args()
    if not compiled_available():
        print("compiled kernel not built; only the Python fallback is available")
    print(f"{'graph':<12}{'edges':>6}{'python s':>12}{'compiled s':>12}{'speedup':>9}")
    for spec in args.graphs.split(","):
        g = family(spec)
        py = best_time(lambda: cluster_histogram(g, backend="python", threads=1), args.repeat)
        if compiled_available():
            hp = cluster_histogram(g, backend="python", threads=1)
            hc = cluster_histogram(g, backend="compiled", threads=1)
            assert hp == hc, f"backends disagree on {spec}"
            cc = best_time(lambda: cluster_histogram(g, backend="compiled", threads=1),
                           args.repeat)
            print(f"{spec:<12}{g.e:>6}{py:>12.4f}{cc:>12.4f}{py / cc:>8.1f}x")
        else:
            print(f"{spec:<12}{g.e:>6}{py:>12.4f}{'-':>12}{'-':>9}")


if __name__ == "__main__":
    main()
