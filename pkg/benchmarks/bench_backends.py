#!/usr/bin/env python3
"""Time the grid sweep on every available kernel backend.

The default grid (denominators up to 6) keeps the pure-Python side quick;
pass --max-den 8 to time the full acceptance grid.

Usage:
    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --max-den 8 --repeat 3
    python benchmarks/bench_backends.py --balanced
"""

import argparse
import time

import hyperhodge.grid as grid


def time_backend(kernel, max_n, max_den, balanced, repeat):
    fn = kernel.sweep_balanced if balanced else kernel.sweep_confluent
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(max_n, max_den)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-den", type=int, default=6)
    ap.add_argument("--balanced", action="store_true", help="time the n = m grid instead")
    ap.add_argument("--repeat", type=int, default=2, help="keep the best of N runs")
    args = ap.parse_args()

    kernels = grid.kernels()
    print(f"active backend: {grid.backend_name()}")
    print(f"grid: max_n={args.max_n}, max_den={args.max_den}, "
          f"{'balanced' if args.balanced else 'confluent'}")
    print()
    print(f"{'backend':<10} {'cases':>12} {'seconds':>10} {'cases/s':>14}")
    timings = {}
    for label in sorted(kernels):
        dt, result = time_backend(kernels[label], args.max_n, args.max_den,
                                  args.balanced, args.repeat)
        timings[label] = dt
        print(f"{label:<10} {result['cases']:>12} {dt:>10.3f} {result['cases'] / dt:>14.0f}")
    if "compiled" in timings and "python" in timings:
        print()
        print(f"speedup (python / compiled): {timings['python'] / timings['compiled']:.1f}x")
    if "compiled" not in timings:
        print()
        print("compiled backend unavailable; build it with: pip install -e . --no-build-isolation")


if __name__ == "__main__":
    main()
