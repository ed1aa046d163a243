"""Pure-Python cyclic Jacobi sweeps (fallback for the compiled kernel).

Same rotation schedule and arithmetic as the Cython version in
_jacobi_fast.pyx, with the O(n) row/column updates done by numpy so the
fallback stays usable for the matrix sizes the oracle produces.
"""

from __future__ import annotations

import math

import numpy as np


def jacobi_sweeps(a: np.ndarray, v: np.ndarray, tol: float, max_sweeps: int) -> int:
    """Diagonalise symmetric `a` in place; accumulate rotations into `v`.

    Returns the number of sweeps used, or -1 if the off-diagonal Frobenius
    norm did not drop below tol * ||A||_F within max_sweeps.
    """
    n = a.shape[0]
    norm = math.sqrt(float(np.sum(a * a)))
    if norm == 0.0:
        return 0
    thresh = tol * norm
    skip = thresh / max(n, 1)

    for sweep in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= thresh:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
    return max_sweeps if off <= thresh else -1
