"""Brute-force ground truth in a truncated two-party Fock basis.

Shared Bell resources and post-measurement states are assembled explicitly as
dense real symmetric matrices; partial transposes, eigenvalues (via the
Jacobi kernel), negativities and fidelities are then computed numerically
with no reference to any closed form.

Two negativity pathways exist for the bosonic resource and they do NOT agree:

- negativity_numeric(bell_state_bosonic(...)) diagonalises the fully
  assembled partial transpose.  Neighbouring excitation sectors couple
  through shared basis states, and the resulting negativity decays to zero
  for large squeezing.
- blockwise_negativity_bosonic(...) diagonalises each excitation sector as an
  isolated 4x4 block.  This is the decomposition whose negative eigenvalues
  are the closed-form family lambda_n, and whose sum reproduces the
  closed-form series in channels.log_negativity_boson.

Both are reported side by side by reports.negativity_rows; the package never
silently picks one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from bhent.errors import ContractViolationError, PhysicsDomainError, TruncationError
from bhent.kernels import jacobi_eigh

DEFAULT_TRUNC = 40
MAX_TRUNC = 200

Label = tuple


@dataclass(frozen=True)
class TruncatedDensityMatrix:
    """Dense real symmetric matrix with labelled basis states.

    basis entries are hashable labels; for two-party states they are
    (party_a, party_b) pairs so the partial transpose can act on party A.
    trace_deficit is the analytically known probability mass lost to
    truncation (0 for exact finite constructions).
    """

    basis: tuple[Label, ...]
    data: np.ndarray
    trace_deficit: float = 0.0

    def __post_init__(self) -> None:
        n = len(self.basis)
        if self.data.shape != (n, n):
            raise ContractViolationError(
                f"matrix shape {self.data.shape} does not match basis of size {n}"
            )
        scale = max(float(np.max(np.abs(self.data))), 1.0)
        asym = float(np.max(np.abs(self.data - self.data.T)))
        if asym > 1e-14 * scale:
            raise ContractViolationError(f"density matrix asymmetry {asym}")
        if float(np.min(np.diag(self.data))) < -1e-14:
            raise ContractViolationError("negative diagonal entry in density matrix")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: Label) -> int:
        return self.basis.index(label)

    def trace(self) -> float:
        return float(np.trace(self.data))


@dataclass(frozen=True)
class DualRailQubit:
    """Logical qubit alpha|0> + beta|1> in dual-rail encoding (real amplitudes)."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if abs(self.alpha**2 + self.beta**2 - 1.0) > 1e-12:
            raise PhysicsDomainError(
                f"qubit amplitudes not normalised: {self.alpha}, {self.beta}"
            )

    def conditional(self, i: int, j: int) -> tuple[float, float]:
        """Amplitudes (x_ij, y_ij) of the state conditioned on measurement (i, j)."""
        table = {
            (0, 0): (self.alpha, self.beta),
            (0, 1): (self.beta, self.alpha),
            (1, 0): (self.alpha, -self.beta),
            (1, 1): (-self.beta, self.alpha),
        }
        try:
            return table[(i, j)]
        except KeyError:
            raise PhysicsDomainError(f"measurement outcome must be two bits, got {(i, j)}")


def _squeeze_amplitudes(r: float, n_trunc: int) -> tuple[np.ndarray, np.ndarray]:
    """Expansion coefficients of the logical 0/1 states over region-II occupation n.

    c0[n] = tanh^n r / cosh r           (|n>_I |n>_II)
    c1[n] = tanh^n r sqrt(n+1)/cosh^2 r (|n+1>_I |n>_II)
    """
    t = math.tanh(r)
    c = math.cosh(r)
    n = np.arange(n_trunc + 1)
    base = t**n
    return base / c, base * np.sqrt(n + 1) / (c * c)


def _bosonic_trace_deficit(r: float, n_trunc: int) -> float:
    """Analytic probability mass of the Bell resource beyond truncation."""
    s = math.tanh(r) ** 2
    if s == 0.0:
        return 0.0
    c2 = math.cosh(r) ** 2
    head = s ** (n_trunc + 1)
    tail_geo = head / (1.0 - s)
    tail_lin = head * ((n_trunc + 2) - (n_trunc + 1) * s) / (1.0 - s) ** 2
    return tail_geo / (2.0 * c2) + tail_lin / (2.0 * c2 * c2)


def bell_state_bosonic(r: float, n_trunc: int = DEFAULT_TRUNC) -> TruncatedDensityMatrix:
    """Bosonic Bell resource after tracing the causally hidden region.

    Party A is a qubit, party B a Fock mode truncated at occupation
    n_trunc + 1.  Each hidden-region occupation n contributes a rank-one
    block with entries {1, sqrt(n+1)/cosh r, (n+1)/cosh^2 r} times
    tanh^(2n) r / (2 cosh^2 r).
    """
    if r < 0:
        raise PhysicsDomainError(f"squeezing parameter must be >= 0, got {r}")
    if not 2 <= n_trunc <= MAX_TRUNC:
        raise PhysicsDomainError(f"truncation must be in [2, {MAX_TRUNC}], got {n_trunc}")
    deficit = _bosonic_trace_deficit(r, n_trunc)
    if deficit > 0.01:
        raise TruncationError(
            f"truncation {n_trunc} too small for r={r}: trace deficit {deficit:.3g}"
        )

    kmax = n_trunc + 1
    basis = tuple((a, k) for a in (0, 1) for k in range(kmax + 1))
    dim = len(basis)
    idx = {lbl: i for i, lbl in enumerate(basis)}
    c0, c1 = _squeeze_amplitudes(r, n_trunc)

    rho = np.zeros((dim, dim))
    for n in range(n_trunc + 1):
        w = np.zeros(dim)
        w[idx[(0, n)]] = c0[n]
        w[idx[(1, n + 1)]] = c1[n]
        rho += 0.5 * np.outer(w, w)
    return TruncatedDensityMatrix(basis, rho, deficit)


def bell_block_bosonic(r: float, n: int) -> TruncatedDensityMatrix:
    """Single excitation-sector block of the bosonic Bell resource.

    Lives on its own four-state basis {(0,n), (0,n+1), (1,n), (1,n+1)}; the
    diagonal entries belonging to neighbouring sectors are absent by
    construction.  Unnormalised (its trace is the sector weight).
    """
    if r < 0 or n < 0:
        raise PhysicsDomainError(f"invalid block parameters r={r}, n={n}")
    t = math.tanh(r)
    c = math.cosh(r)
    pref = t ** (2 * n) / (2.0 * c * c)
    basis = ((0, n), (0, n + 1), (1, n), (1, n + 1))
    m = np.zeros((4, 4))
    m[0, 0] = 1.0
    m[0, 3] = m[3, 0] = math.sqrt(n + 1) / c
    m[3, 3] = (n + 1) / (c * c)
    return TruncatedDensityMatrix(basis, pref * m, 0.0)


def bell_state_fermionic(r: float) -> TruncatedDensityMatrix:
    """Fermionic Bell resource: exact 4x4 matrix in the basis {00, 01, 10, 11}."""
    if not 0.0 <= r <= math.pi / 4 + 1e-12:
        raise PhysicsDomainError(f"fermionic squeezing must be in [0, pi/4], got {r}")
    cr = math.cos(r)
    basis = ((0, 0), (0, 1), (1, 0), (1, 1))
    m = np.zeros((4, 4))
    m[0, 0] = cr * cr
    m[1, 1] = math.sin(r) ** 2
    m[0, 3] = m[3, 0] = cr
    m[3, 3] = 1.0
    return TruncatedDensityMatrix(basis, 0.5 * m, 0.0)


def partial_transpose(rho: TruncatedDensityMatrix) -> TruncatedDensityMatrix:
    """Transpose party A's indices: <a,b|rho^T|a',b'> = <a',b|rho|a,b'>.

    An involution that preserves trace and Frobenius norm.  Requires the
    label set to be closed under swapping the party-A components.
    """
    idx = {lbl: i for i, lbl in enumerate(rho.basis)}
    out = np.empty_like(rho.data)
    for (a, b), i in idx.items():
        for (a2, b2), j in idx.items():
            try:
                out[i, j] = rho.data[idx[(a2, b)], idx[(a, b2)]]
            except KeyError:
                raise ContractViolationError(
                    f"basis not closed under partial transpose: missing {(a2, b)} or {(a, b2)}"
                )
    return TruncatedDensityMatrix(rho.basis, out, rho.trace_deficit)


def eigenvalues_symmetric(matrix: np.ndarray, vectors: bool = False):
    """Sorted eigenvalues of a real symmetric matrix via cyclic Jacobi."""
    return jacobi_eigh(matrix, vectors=vectors) if vectors else jacobi_eigh(matrix)[0]


@dataclass(frozen=True)
class NumericNegativity:
    negativity: float
    log_negativity: float


def negativity_numeric(rho: TruncatedDensityMatrix) -> NumericNegativity:
    """Full-spectrum negativity: N = sum (|lambda| - lambda)/2 over the PPT spectrum."""
    eig = eigenvalues_symmetric(partial_transpose(rho).data)
    n_val = float(np.sum((np.abs(eig) - eig) / 2.0))
    return NumericNegativity(n_val, math.log2(2.0 * n_val + 1.0))


def blockwise_negativity_bosonic(r: float, n_blocks: int = DEFAULT_TRUNC) -> NumericNegativity:
    """Negativity from the isolated excitation-sector blocks.

    Diagonalises the partial transpose of each bell_block_bosonic(r, n)
    separately and sums the negative eigenvalues.  This matrix construction
    is what the closed-form eigenvalue family and series describe; it differs
    from the full-spectrum value of negativity_numeric (see module docstring).
    """
    total = 0.0
    for n in range(n_blocks + 1):
        eig = eigenvalues_symmetric(partial_transpose(bell_block_bosonic(r, n)).data)
        total += float(np.sum((np.abs(eig) - eig) / 2.0))
    return NumericNegativity(total, math.log2(2.0 * total + 1.0))


def blockwise_negative_eigenvalue(r: float, n: int) -> float:
    """Most negative eigenvalue of the isolated n-th PPT sector block."""
    eig = eigenvalues_symmetric(partial_transpose(bell_block_bosonic(r, n)).data)
    return float(eig[0])


def bob_post_state_bosonic(
    r: float,
    qubit: DualRailQubit,
    outcome: tuple[int, int],
    n_trunc: int = DEFAULT_TRUNC,
) -> TruncatedDensityMatrix:
    """Receiver's post-measurement state for the bosonic dual-rail protocol.

    The conditioned logical state x|0> + y|1> is written in dual-rail form,
    each of the receiver's two cavity modes is expanded through the two-mode
    squeezing relation, and the hidden region is traced out.  Basis labels
    are (k1, k2) occupation pairs of the two observable modes.
    """
    if r < 0:
        raise PhysicsDomainError(f"squeezing parameter must be >= 0, got {r}")
    if not 2 <= n_trunc <= MAX_TRUNC:
        raise PhysicsDomainError(f"truncation must be in [2, {MAX_TRUNC}], got {n_trunc}")
    x, y = qubit.conditional(*outcome)
    c0, c1 = _squeeze_amplitudes(r, n_trunc)

    kmax = n_trunc + 1
    basis = tuple((k1, k2) for k1 in range(kmax + 1) for k2 in range(kmax + 1))
    idx = {lbl: i for i, lbl in enumerate(basis)}
    dim = len(basis)
    rho = np.zeros((dim, dim))
    # Hidden-region occupations (n1, n2) are orthogonal, so each pair
    # contributes a rank-one projector onto
    #   x c1[n1] c0[n2] |n1+1, n2>  +  y c0[n1] c1[n2] |n1, n2+1>.
    for n1 in range(n_trunc + 1):
        for n2 in range(n_trunc + 1):
            amp_x = x * c1[n1] * c0[n2]
            amp_y = y * c0[n1] * c1[n2]
            i = idx[(n1 + 1, n2)]
            j = idx[(n1, n2 + 1)]
            rho[i, i] += amp_x * amp_x
            rho[j, j] += amp_y * amp_y
            rho[i, j] += amp_x * amp_y
            rho[j, i] += amp_x * amp_y
    deficit = 1.0 - float(np.trace(rho))
    if deficit > 0.01:
        raise TruncationError(
            f"truncation {n_trunc} too small for r={r}: trace deficit {deficit:.3g}"
        )
    return TruncatedDensityMatrix(basis, rho, deficit)


def bob_post_state_fermionic(
    r: float, qubit: DualRailQubit, outcome: tuple[int, int]
) -> TruncatedDensityMatrix:
    """Receiver's post-measurement state for the fermionic protocol (exact 4x4).

    rho = cos^2 r |phi_ij><phi_ij| + sin^2 r |11><11| on the two dual-rail
    modes; Pauli blocking caps each occupation at 1.
    """
    if not 0.0 <= r <= math.pi / 4 + 1e-12:
        raise PhysicsDomainError(f"fermionic squeezing must be in [0, pi/4], got {r}")
    x, y = qubit.conditional(*outcome)
    basis = ((0, 0), (0, 1), (1, 0), (1, 1))
    phi = np.array([0.0, y, x, 0.0])
    rho = math.cos(r) ** 2 * np.outer(phi, phi)
    rho[3, 3] += math.sin(r) ** 2
    return TruncatedDensityMatrix(basis, rho, 0.0)


def fidelity_numeric(rho: TruncatedDensityMatrix, target: dict[Label, float]) -> float:
    """<psi|rho|psi> for a normalised target state given as {label: amplitude}."""
    vec = np.zeros(rho.dim)
    idx = {lbl: i for i, lbl in enumerate(rho.basis)}
    for lbl, amp in target.items():
        try:
            vec[idx[lbl]] = amp
        except KeyError:
            raise PhysicsDomainError(f"target label {lbl} not in the state's basis")
    norm = float(vec @ vec)
    if abs(norm - 1.0) > 1e-12:
        raise PhysicsDomainError(f"target state not normalised: |psi|^2 = {norm}")
    return float(vec @ rho.data @ vec)


def dual_rail_target(x: float, y: float) -> dict[Label, float]:
    """Dual-rail target state x|1,0> + y|0,1> as a label->amplitude map."""
    return {(1, 0): x, (0, 1): y}
