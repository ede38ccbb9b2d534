#!/usr/bin/env python3
"""Benchmark the compiled box-scan kernel against the pure-Python twin.

The box scan is the hot loop of the graded-cohomology method: sum a
per-mask contribution table over every lattice point of a box, where the
mask records which ray inequalities fail. This script times both
implementations on the same workloads and checks they agree.

Usage: python3 benchmarks/bench_scan.py [--radius R] [--repeat N]
"""

import argparse
import time

from toricchi import _scan_py, kernel
from toricchi.catalog import build_catalog
from toricchi.oracle import _contribution_table

WORKLOADS = [
    # (fan name, divisor coefficients)
    ("p2", (5, -2, 3)),
    ("f2", (4, 1, -3, 2)),
    ("bl3_p2", (3, -1, 2, 0, -2, 1)),
    ("p1xp1xp1", (2, 1, -1, 3, 0, 2)),
]


def time_impl(fn, args, repeat):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None or dt < best else best
    return value, best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=14, help="half-width of the scan box")
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions, best kept")
    opts = ap.parse_args()

    compiled = kernel._impl
    print(f"kernel backend: {kernel.backend()}")
    if compiled is None:
        print("compiled extension unavailable; timing the pure kernel only")

    for name, coeffs in WORKLOADS:
        fan = build_catalog(name)
        rays = [list(u) for u in fan.rays]
        bounds = [-a for a in coeffs]
        table = list(_contribution_table(fan))
        lo = [-opts.radius] * fan.dim
        hi = [opts.radius] * fan.dim
        npoints = (2 * opts.radius + 1) ** fan.dim

        pure_val, pure_t = time_impl(
            _scan_py.box_sum, (tuple(lo), tuple(hi), rays, bounds, table), opts.repeat
        )
        line = (
            f"{name:>10}  dim {fan.dim}  rays {len(rays)}  {npoints:>8} points | "
            f"pure {pure_t * 1e3:8.2f} ms ({npoints / pure_t / 1e6:6.2f} Mpts/s)"
        )
        if compiled is not None:
            comp_val, comp_t = time_impl(
                compiled.box_sum, (lo, hi, rays, bounds, table), opts.repeat
            )
            agree = "ok" if comp_val == pure_val else "MISMATCH"
            line += (
                f" | compiled {comp_t * 1e3:7.2f} ms "
                f"({npoints / comp_t / 1e6:7.2f} Mpts/s) | "
                f"speedup {pure_t / comp_t:6.1f}x | {agree}"
            )
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
