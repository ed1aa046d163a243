"""Compares the compiled and pure-Python Jacobi eigensolver backends.

Run as `python3 benchmarks/bench_jacobi.py`.  Both backends execute the same
rotation schedule, so the check column should show agreement near machine
precision; the compiled kernel simply gets there faster.
"""

import time

import numpy as np

from bhent import kernels
from bhent._jacobi_py import jacobi_sweeps as py_sweeps

try:
    from bhent._jacobi_fast import jacobi_sweeps as cy_sweeps
except ImportError:
    cy_sweeps = None

SIZES = (20, 50, 100, 200)
REPEATS = 3


def run(backend, a):
    work = a.copy()
    v = np.eye(a.shape[0])
    t0 = time.perf_counter()
    sweeps = backend(work, v, kernels.JACOBI_TOL, kernels.MAX_SWEEPS)
    dt = time.perf_counter() - t0
    if sweeps < 0:
        raise RuntimeError("did not converge")
    return dt, np.sort(np.diag(work))


def main():
    rng = np.random.default_rng(42)
    print(f"active package backend: {kernels.BACKEND}")
    print(f"{'n':>5} {'python (s)':>12} {'cython (s)':>12} {'speedup':>9} {'max |diff|':>12}")
    for n in SIZES:
        m = rng.standard_normal((n, n))
        a = (m + m.T) / 2.0
        t_py = min(run(py_sweeps, a)[0] for _ in range(REPEATS))
        w_py = run(py_sweeps, a)[1]
        if cy_sweeps is None:
            print(f"{n:>5} {t_py:>12.4f} {'n/a':>12} {'n/a':>9} {'n/a':>12}")
            continue
        t_cy = min(run(cy_sweeps, a)[0] for _ in range(REPEATS))
        w_cy = run(cy_sweeps, a)[1]
        diff = float(np.max(np.abs(w_py - w_cy)))
        print(f"{n:>5} {t_py:>12.4f} {t_cy:>12.4f} {t_py / t_cy:>9.1f} {diff:>12.3e}")


if __name__ == "__main__":
    main()
