#!/usr/bin/env python3
"""Times the compiled closure kernel against the pure-Python fallback.

Generates random subclass graphs of growing size and reports per-kernel
wall time for the full SCC + transitive-closure computation. Run after
building the extension (`pip install -e . --no-build-isolation`):

    python benchmarks/bench_closure.py
"""

from __future__ import annotations

import random
import time

from skoo._closure_py import closure_kernel as python_kernel

try:
    from skoo._closure import closure_kernel as cython_kernel
except ImportError:
    cython_kernel = None

SIZES = ((200, 1_000), (1_000, 8_000), (3_000, 30_000), (6_000, 80_000))
REPEATS = 3


def random_edges(rng: random.Random, n: int, m: int) -> list[tuple[int, int]]:
    return [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]


def timed(kernel, n: int, edges) -> float:
    best = float("inf")
    for _ in range(REPEATS):
        start = time.perf_counter()
        kernel(n, edges)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    rng = random.Random(2026)
    kernels = [("python", python_kernel)]
    if cython_kernel is not None:
        kernels.append(("cython", cython_kernel))
    else:
        print("note: compiled kernel not built; timing the fallback only\n")

    header = f"{'classes':>8} {'edges':>8}" + "".join(f" {name:>12}" for name, _ in kernels)
    if len(kernels) == 2:
        header += f" {'speedup':>9}"
    print(header)
    for n, m in SIZES:
        edges = random_edges(rng, n, m)
        times = [timed(kernel, n, edges) for _, kernel in kernels]
        row = f"{n:>8} {m:>8}" + "".join(f" {t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f" {times[0] / times[1]:>8.1f}x"
        print(row)

    # sanity: identical canonical output on the last graph
    if cython_kernel is not None:
        comp_a, reach_a = python_kernel(SIZES[-1][0], edges)
        comp_b, reach_b = cython_kernel(SIZES[-1][0], edges)
        remap = {}
        agree = all(remap.setdefault(a, b) == b for a, b in zip(comp_a, comp_b))
        print(f"\nkernels agree on partition: {agree}")


if __name__ == "__main__":
    main()
