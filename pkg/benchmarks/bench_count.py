"""Benchmark the two lattice-point counting kernels on identical inputs.

Times the compiled kernel against the pure-Python one on dilates of P(4,5)
and P(5,5) -- the same workloads the volume and Ehrhart oracles lean on --
and prints a small table with the speedup.  Both kernels must return the
same count; the script aborts if they ever disagree.

Usage: python3 benchmarks/bench_count.py
"""

import time

from partperm import KERNEL_NAME, pp_box, pp_facets
from partperm import _counting_py

try:
    from partperm import _countcore
except ImportError:
    _countcore = None


def workload(m, n, t):
    """Kernel arguments for counting points of the dilate t * P(m,n)."""
    h = pp_facets(m, n).dilate(t)
    rows_a = [row for row, _ in h.rows]
    rows_b = [b for _, b in h.rows]
    box = pp_box(m, n)
    lows = [lo * t for lo, _ in box]
    highs = [hi * t for _, hi in box]
    return rows_a, rows_b, lows, highs


def time_kernel(fn, args, repeats):
    best = None
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def main():
    cases = [
        (4, 5, 2),
        (4, 5, 4),
        (5, 5, 3),
        (5, 6, 5),
    ]
    print(f"default kernel in this build: {KERNEL_NAME}")
    if _countcore is None:
        print("compiled kernel unavailable; timing the pure kernel only")
    header = f"{'case':>14} {'points':>12} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for m, n, t in cases:
        args = workload(m, n, t)
        repeats = 3 if m < 5 else 1
        pure_val, pure_dt = time_kernel(
            _counting_py.count_lattice_points, args, repeats)
        if _countcore is not None:
            comp_val, comp_dt = time_kernel(
                _countcore.count_lattice_points, args, repeats)
            if comp_val != pure_val:
                raise SystemExit(
                    f"kernel disagreement on {t}*P({m},{n}): "
                    f"pure={pure_val} compiled={comp_val}")
            speedup = pure_dt / comp_dt if comp_dt > 0 else float("inf")
            print(f"{f'{t}*P({m},{n})':>14} {pure_val:>12} {pure_dt:>10.3f} "
                  f"{comp_dt:>13.4f} {speedup:>7.1f}x")
        else:
            print(f"{f'{t}*P({m},{n})':>14} {pure_val:>12} {pure_dt:>10.3f} "
                  f"{'n/a':>13} {'n/a':>8}")


if __name__ == "__main__":
    main()
