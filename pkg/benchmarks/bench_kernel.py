"""Compare the compiled and pure-Python search kernels on identical inputs.

Run with ``python benchmarks/bench_kernel.py``.  Prints one row per workload
with wall time for each implementation and the speedup factor; also asserts
the two implementations return identical results.
"""

import random
import time

from gfree import _kernel_py
from gfree.graphs import Graph
from gfree.patterns import anchored_bad_masks, parse_pattern

try:
    from gfree import _speedups
except ImportError:
    _speedups = None


def random_graph(rng, n, p=0.5):
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def bench_partition(impl, cases):
    t0 = time.perf_counter()
    out = [
        impl.search_partition(anchored, k, order, 10**7)
        for anchored, k, order in cases
    ]
    return time.perf_counter() - t0, out


def bench_choosability(impl, cases):
    t0 = time.perf_counter()
    out = [
        impl.search_choosability(anchored, n, k, order, 10**7, 10**7)
        for anchored, n, k, order in cases
    ]
    return time.perf_counter() - t0, out


def partition_cases(seed=1, count=200):
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        n = rng.randint(8, 13)
        g = random_graph(rng, n)
        pat = parse_pattern(rng.choice(["K2", "K3", "R:2"]))
        k = rng.randint(2, 4)
        cases.append((anchored_bad_masks(g, pat), k, list(range(n))))
    return cases


def choosability_cases(seed=2, count=3):
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        n = rng.randint(5, 6)
        g = random_graph(rng, n)
        pat = parse_pattern(rng.choice(["K2", "K3"]))
        cases.append((anchored_bad_masks(g, pat), n, 3, list(range(n))))
    return cases


def main():
    if _speedups is None:
        print("compiled kernel not available; nothing to compare")
        return
    workloads = [
        ("partition search (200 graphs, 8-13 vertices)",
         bench_partition, partition_cases()),
        ("choosability enumeration (3 graphs, k=3)",
         bench_choosability, choosability_cases()),
    ]
    print(f"{'workload':<45} {'python':>9} {'cython':>9} {'speedup':>8}")
    for name, bench, cases in workloads:
        t_py, out_py = bench(_kernel_py, cases)
        t_cy, out_cy = bench(_speedups, cases)
        assert out_py == out_cy, f"implementations disagree on {name}"
        print(f"{name:<45} {t_py:>8.3f}s {t_cy:>8.3f}s {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
