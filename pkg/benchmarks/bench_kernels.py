"""Benchmark the scan kernels: numba JIT vs the pure-numpy fallback.

Times the hot workloads behind certificate verification and the triangle
checks.  Each workload runs once for warmup (numba JIT compilation) and is
then timed over --repeat runs, keeping the best.

Usage: python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import os
import time

import numpy as np

from translab import kernels
from translab.arrange import gen_star_coloring


def _homogeneous_block(size: int) -> np.ndarray:
    # words sharing coordinate 0 are 1-homogeneous under the bipartite rule
    return np.arange(1, 2 * size, 2, dtype=np.uint64)


def workloads():
    ell = 16
    bipartite = gen_star_coloring(ell, "bipartite")._params()
    seeded = gen_star_coloring(ell, "seeded-triangle-free", seed=11)._params()
    words = _homogeneous_block(2**15)
    # a zero-neighborhood is 1-homogeneous: the scan cannot exit early
    seeded_words = np.sort(kernels.zero_set_bits(seeded, 0))
    rng = np.random.default_rng(0)
    triples = rng.integers(0, 2**ell, size=(1_000_000, 3), dtype=np.uint64)
    exhaustive = gen_star_coloring(8, "seeded-triangle-free", seed=3)._params()

    yield "all-pairs homogeneity, 32768 words, bipartite", lambda: kernels.find_nonhom_pair(
        bipartite, words
    )
    yield f"all-pairs homogeneity, {seeded_words.size} words, seeded", lambda: kernels.find_nonhom_pair(
        seeded, seeded_words
    )
    yield "exhaustive triangle scan, ell=8, seeded", lambda: kernels.scan_triangles_exhaustive(
        exhaustive
    )
    yield "sampled triangles, 1e6 at ell=16, seeded", lambda: kernels.scan_triangle_batch(
        seeded, triples[:, 0], triples[:, 1], triples[:, 2]
    )
    yield "zero-set enumeration, ell=16, bipartite", lambda: kernels.zero_set_bits(
        bipartite, 0
    )


def time_backend(fn, repeat: int) -> float:
    fn()  # warmup (JIT compile on the numba path)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    names = [name for name, _ in workloads()]
    results = {}
    for backend in ("numba", "numpy"):
        os.environ["TRANSLAB_BACKEND"] = backend
        for name, fn in workloads():
            results[(backend, name)] = time_backend(fn, args.repeat)

    width = max(len(n) for n in names)
    print(f"{'workload':<{width}}  {'numba':>9}  {'numpy':>9}  {'speedup':>8}")
    for name in names:
        nb = results[("numba", name)]
        np_ = results[("numpy", name)]
        print(f"{name:<{width}}  {nb:>8.4f}s  {np_:>8.4f}s  {np_ / nb:>7.1f}x")


if __name__ == "__main__":
    main()
