"""Eigensolver front end: compiled Jacobi kernel with pure-Python fallback.

The backend is selected once at import.  Both backends run the identical
cyclic rotation schedule, so results agree to rounding; see
benchmarks/bench_jacobi.py for a speed comparison.
"""

from __future__ import annotations

import numpy as np

from bhent.errors import ContractViolationError

try:
    from bhent._jacobi_fast import jacobi_sweeps as _jacobi_sweeps

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from bhent._jacobi_py import jacobi_sweeps as _jacobi_sweeps

    BACKEND = "python"

JACOBI_TOL = 1e-12
MAX_SWEEPS = 60


def jacobi_eigh(
    matrix: np.ndarray,
    vectors: bool = False,
    tol: float = JACOBI_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigen-decompose a real symmetric matrix by cyclic Jacobi rotations.

    Returns eigenvalues in ascending order and, when requested, the matching
    orthonormal eigenvector columns.  Convergence requires the off-diagonal
    Frobenius norm to drop below tol * ||A||_F.
    """
    a = np.array(matrix, dtype=np.float64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolationError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    scale = max(float(np.max(np.abs(a))), 1.0)
    asym = float(np.max(np.abs(a - a.T)))
    if asym > 1e-10 * scale:
        raise ContractViolationError(f"matrix asymmetry {asym} exceeds contract (scale {scale})")

    v = np.eye(n)
    sweeps = _jacobi_sweeps(a, v, tol, max_sweeps)
    if sweeps < 0:
        raise ContractViolationError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    if vectors:
        return w, v[:, order]
    return w, None
