"""Compiled kernels vs their plain-Python originals (``kernel.py_func``).

    python3 benchmarks/bench_kernels.py [--repeat N]

Both paths must return identical results; the script exits 1 if they differ.
With ROOKDOM_DISABLE_JIT=1 both columns time the same Python code.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

import numpy as np

from rookdom import kernels
from rookdom._jit import JIT_ENABLED
from rookdom.constructions import diagonal_blocks
from rookdom.solver import _margin_arrays


def timed(fn, *args, repeat=3):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def brute_case(n, m, size):
    return (kernels.brute_force_scan, kernels.brute_force_scan.py_func, (n, m, size))


def margin_case(n, m, k):
    rows, cols = _margin_arrays(k, n, m, False)
    jit_out = np.zeros((n, m), dtype=np.int8)
    py_out = np.zeros((n, m), dtype=np.int8)

    def fast():
        return kernels.scan_margin_pairs(rows, cols, -1, jit_out)

    def slow():
        return kernels.scan_margin_pairs.py_func(rows, cols, -1, py_out)

    return fast, slow, ()


def flow_case(n):
    # margins of the n x n diagonal-block placement, sorted non-increasing
    cfg = diagonal_blocks(n)
    r = np.sort(cfg.row_count.astype(np.int64))[::-1].copy()
    c = np.sort(cfg.col_count.astype(np.int64))[::-1].copy()
    jit_out = np.zeros((n, n), dtype=np.int8)
    py_out = np.zeros((n, n), dtype=np.int8)
    return (lambda: kernels.realize_margins(r, c, jit_out),
            lambda: kernels.realize_margins.py_func(r, c, py_out), ())


CASES = [
    ("brute 4x4 k=6", *brute_case(4, 4, 6)),
    ("brute 4x5 k=7", *brute_case(4, 5, 7)),
    ("brute 5x5 k=7 (infeasible)", *brute_case(5, 5, 7)),
    ("margin 6x9 k=11 (infeasible)", *margin_case(6, 9, 11)),
    ("margin 7x10 k=12 (infeasible)", *margin_case(7, 10, 12)),
    ("margin 8x12 k=15 (infeasible)", *margin_case(8, 12, 15)),
    ("margin 12x18 k=23", *margin_case(12, 18, 23)),
    ("flow 200x200 diagonal margins", *flow_case(200)),
    ("flow 300x300 diagonal margins", *flow_case(300)),
]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    print(f"numba jit enabled: {JIT_ENABLED}")
    print(f"{'case':32s} {'jit [s]':>10s} {'python [s]':>11s} {'speedup':>8s}")
    mismatch = False
    for name, fast, slow, a in CASES:
        fast(*a)  # compile outside the timing
        tf, rf = timed(fast, *a, repeat=args.repeat)
        ts, rs = timed(slow, *a, repeat=1)
        same = np.array_equal(np.asarray(rf), np.asarray(rs))
        mismatch |= not same
        flag = "" if same else "  RESULTS DIFFER"
        print(f"{name:32s} {tf:10.4f} {ts:11.4f} {ts / max(tf, 1e-9):7.1f}x{flag}")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
