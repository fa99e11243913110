"""Compare the numba and numpy edge-subset kernels.

    python3 benchmarks/bench_kernels.py --orders 8 10 12 --repeat 3

Each row times the full chromatic symmetric function and subtree count of
every tree of the given order (numba timings exclude the first, compiling call).
"""

from __future__ import annotations

import argparse
import time

from chromtree import _kernels
from chromtree.graphs import enumerate_trees


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(order: int, backend: str, repeat: int) -> tuple[float, float]:
    trees = [t.edges for t in enumerate_trees(order)]

    def types():
        for edges in trees:
            _kernels.type_counts(order, edges, backend)

    def subtrees():
        for edges in trees:
            _kernels.subtree_counts(order, edges, backend)

    return _time(types, repeat), _time(subtrees, repeat)


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--orders", type=int, nargs="+", default=[8, 10, 12])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if "numba" in backends:
        _kernels.type_counts(3, [(0, 1), (1, 2)], "numba")
        _kernels.subtree_counts(3, [(0, 1), (1, 2)], "numba")

    print(f"{'n':>3} {'trees':>6} {'subsets':>10} " + " ".join(f"{b + ' csf':>11} {b + ' stp':>11}" for b in backends) + "  speedup")
    for n in args.orders:
        count = sum(1 for _ in enumerate_trees(n))
        row = {b: bench(n, b, args.repeat) for b in backends}
        cells = " ".join(f"{row[b][0]:>10.3f}s {row[b][1]:>10.3f}s" for b in backends)
        speed = ""
        if "numba" in row:
            speed = f"  {row['numpy'][0] / row['numba'][0]:.1f}x / {row['numpy'][1] / row['numba'][1]:.1f}x"
        print(f"{n:>3} {count:>6} {count << (n - 1):>10} {cells}{speed}")


if __name__ == "__main__":
    main()
