# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled cyclic Jacobi sweeps; hot kernel behind kernels.jacobi_eigh."""

from libc.math cimport fabs, sqrt, copysign


def jacobi_sweeps(double[:, ::1] a, double[:, ::1] v, double tol, int max_sweeps):
    """Diagonalise symmetric `a` in place; accumulate rotations into `v`.

    Returns the number of sweeps used, or -1 if the off-diagonal Frobenius
    norm did not drop below tol * ||A||_F within max_sweeps.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, p, q, sweep
    cdef double norm = 0.0, off, thresh, skip
    cdef double apq, theta, t, c, s, xp, xq

    for i in range(n):
        for j in range(n):
            norm += a[i, j] * a[i, j]
    norm = sqrt(norm)
    if norm == 0.0:
        return 0
    thresh = tol * norm
    skip = thresh / n

    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        off = sqrt(off)
        if off <= thresh:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c

                for i in range(n):
                    xp = a[i, p]
                    xq = a[i, q]
                    a[i, p] = c * xp - s * xq
                    a[i, q] = s * xp + c * xq
                for i in range(n):
                    xp = a[p, i]
                    xq = a[q, i]
                    a[p, i] = c * xp - s * xq
                    a[q, i] = s * xp + c * xq
                for i in range(n):
                    xp = v[i, p]
                    xq = v[i, q]
                    v[i, p] = c * xp - s * xq
                    v[i, q] = s * xp + c * xq

    off = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                off += a[i, j] * a[i, j]
    off = sqrt(off)
    if off <= thresh:
        return max_sweeps
    return -1
