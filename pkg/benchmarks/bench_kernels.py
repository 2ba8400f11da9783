"""Time the hook-histogram kernels: numba vs the numpy fallback.

    python3 benchmarks/bench_kernels.py [--n 30 40 45] [--repeat 3]

Each backend is warmed up once (JIT compile or cache load), then timed on a
cold memo so every run enumerates P(n) from scratch. Results are compared
for equality before timings are reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from khooks import enumeration
from khooks._accel import HAVE_NUMBA
from khooks.enumeration import hook_stats, partition_count


def best_of(n: int, backend: str, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        enumeration.clear_cache()
        t0 = time.perf_counter()
        hook_stats(n, backend)
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[30, 40, 45])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]
    for b in backends:
        hook_stats(5, b)

    print(f"{'n':>4} {'p(n)':>9} " + " ".join(f"{b:>10}" for b in backends) + "  speedup")
    for n in args.n:
        enumeration.clear_cache()
        ref = hook_stats(n, backends[-1])
        for b in backends[:-1]:
            enumeration.clear_cache()
            assert np.array_equal(hook_stats(n, b).dist, ref.dist), f"backends disagree at n={n}"
        secs = [best_of(n, b, args.repeat) for b in backends]
        speed = f"{secs[-1] / secs[0]:7.1f}x" if len(secs) == 2 else "      -"
        print(f"{n:>4} {partition_count(n):>9} " + " ".join(f"{s:>9.3f}s" for s in secs) + f"  {speed}")


if __name__ == "__main__":
    main()
