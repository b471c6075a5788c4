#!/usr/bin/env python3
"""Compare the compiled row-operation kernel with the pure-Python fallback.

Two views: tight-loop microbenchmarks of the row operations themselves,
and an end-to-end catalog solve run in a subprocess with each kernel
forced in turn (MINPROJ_PURE=1 selects the fallback).
"""

import os
import subprocess
import sys
import time

from minproj._kernel import IMPLEMENTATION, fallback

ROW_LENGTH = 64
REPS = 4000

_SOLVE_SNIPPET = """
import time
from minproj._kernel import IMPLEMENTATION
from minproj.catalog import linf_ball
from minproj.geometry import Subspace
from minproj.projections import face_dimension, projection_constant

start = time.perf_counter()
space = linf_ball(5)
subspace = Subspace.from_kernel([(1, 1, 1, 0, 0)])
report = projection_constant(space, subspace)
face_dimension(space, subspace, report)
assert str(report.lam) == "4/3"
print(IMPLEMENTATION)
print(time.perf_counter() - start)
"""


def _compiled_module():
    try:
        from minproj._kernel import _speedups
        return _speedups
    except ImportError:
        return None


def _make_row(seed):
    state = seed
    num, den = [], []
    for _ in range(ROW_LENGTH):
        state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
        n = state >> 33
        num.append(int(n % 2_000_001 - 1_000_000))
        den.append(int(n % 97 + 1))
    return num, den


def _time_scale(module):
    num0, den0 = _make_row(11)
    start = time.perf_counter()
    for _ in range(REPS):
        num, den = num0.copy(), den0.copy()
        module.scale_row(num, den, 35, 6)
    return time.perf_counter() - start


def _time_axpy(module):
    dnum0, dden0 = _make_row(12)
    snum, sden = _make_row(13)
    start = time.perf_counter()
    for _ in range(REPS):
        dnum, dden = dnum0.copy(), dden0.copy()
        module.row_axpy(dnum, dden, snum, sden, 7, 3)
    return time.perf_counter() - start


def _solve_with(pure):
    env = dict(os.environ)
    if pure:
        env["MINPROJ_PURE"] = "1"
    else:
        env.pop("MINPROJ_PURE", None)
    result = subprocess.run([sys.executable, "-c", _SOLVE_SNIPPET],
                            capture_output=True, text=True, env=env, check=True)
    label, elapsed = result.stdout.strip().splitlines()
    return label, float(elapsed)


def main():
    print(f"ambient kernel: {IMPLEMENTATION}")
    compiled = _compiled_module()

    print(f"\nmicrobenchmarks ({REPS} rows of length {ROW_LENGTH}, seconds):")
    print(f"{'operation':<10} {'pure':>8} {'compiled':>9} {'speedup':>8}")
    for name, timer in (("scale_row", _time_scale), ("row_axpy", _time_axpy)):
        pure_t = timer(fallback)
        if compiled is None:
            print(f"{name:<10} {pure_t:>8.3f} {'n/a':>9} {'n/a':>8}")
        else:
            comp_t = timer(compiled)
            print(f"{name:<10} {pure_t:>8.3f} {comp_t:>9.3f} {pure_t / comp_t:>7.2f}x")

    print("\nend to end (projection constant of a hyperplane in linf^5):")
    for pure in (True, False):
        label, elapsed = _solve_with(pure)
        print(f"  {label:<30} {elapsed:.3f}s")


if __name__ == "__main__":
    main()
