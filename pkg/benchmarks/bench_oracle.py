"""Benchmark the state-space kernels: numba JIT vs the numpy fallback.

Run: python3 benchmarks/bench_oracle.py
The same workloads run on both paths and the results are asserted equal.
"""

from __future__ import annotations

import time

import numpy as np

from recolor import degeneracy_order, gen_partial_2tree, random_proper_coloring
from recolor import _kernels
from recolor.oracle import encode_coloring


def _setup(n: int, k: int, seed: int):
    g = gen_partial_2tree(n, 0.7, seed)
    order = degeneracy_order(g)
    alpha = random_proper_coloring(g, order, k, seed + 1)
    pows = _kernels.powers(g.n, k)
    eu = np.array([u for u, _ in g.edges()], dtype=np.int64)
    ev = np.array([v for _, v in g.edges()], dtype=np.int64)
    start = encode_coloring(alpha, k)
    return g, pows, eu, ev, start


def _time(fn, runs: int) -> float:
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_case(n: int, k: int, seed: int = 1, runs: int = 3) -> None:
    g, pows, eu, ev, start = _setup(n, k, seed)
    size = k**g.n
    print(f"\n--- n={g.n}, k={k}: {size:,} states, {g.num_edges()} edges ---")

    mask_np = None
    mask_jit = None

    def run_mask_numpy():
        nonlocal mask_np
        mask_np = _kernels.proper_mask_numpy(g.n, k, eu, ev, pows)

    t_np = _time(run_mask_numpy, runs)

    if _kernels.NUMBA_AVAILABLE:

        def run_mask_jit():
            nonlocal mask_jit
            mask_jit = _kernels._proper_mask_jit(size, k, eu, ev, pows)

        run_mask_jit()  # warm the JIT before timing
        t_jit = _time(run_mask_jit, runs)
        assert np.array_equal(mask_np, mask_jit)
        print(f"proper mask   numpy {t_np * 1e3:8.2f} ms   numba {t_jit * 1e3:8.2f} ms"
              f"   speedup {t_np / t_jit:5.1f}x")
    else:
        print(f"proper mask   numpy {t_np * 1e3:8.2f} ms   (numba unavailable)")

    dist_np = None

    def run_bfs_numpy():
        nonlocal dist_np
        dist_np = _kernels.bfs_levels_numpy(start, mask_np, g.n, k, pows)

    t_np = _time(run_bfs_numpy, runs)

    if _kernels.NUMBA_AVAILABLE:
        dist_jit = None

        def run_bfs_jit():
            nonlocal dist_jit
            dist_jit = np.full(size, -1, dtype=np.int32)
            queue = np.empty(int(mask_np.sum()), dtype=np.int64)
            _kernels._bfs_fill_jit(
                np.int64(start), mask_np, dist_jit, queue, g.n, k, pows
            )

        run_bfs_jit()
        t_jit = _time(run_bfs_jit, runs)
        assert np.array_equal(dist_np, dist_jit)
        print(f"bfs levels    numpy {t_np * 1e3:8.2f} ms   numba {t_jit * 1e3:8.2f} ms"
              f"   speedup {t_np / t_jit:5.1f}x")
    else:
        print(f"bfs levels    numpy {t_np * 1e3:8.2f} ms   (numba unavailable)")


def main() -> None:
    print(f"active backend for library calls: {_kernels.active_backend()}")
    bench_case(n=7, k=4)
    bench_case(n=8, k=5)
    bench_case(n=9, k=4)


if __name__ == "__main__":
    main()
