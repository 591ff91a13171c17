"""Dense complex matrix kernel.

Matrices are plain ``numpy`` arrays of ``complex128``. Qubit ordering
follows the ket ordering: qubit 0 is the most significant bit of the basis
index, so ``|i0 i1 i2>`` sits at row ``4*i0 + 2*i1 + i2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .constants import (
    EIG_HERMITIAN_TOL,
    HERMITIAN_TOL,
    JACOBI_MAX_SWEEPS,
    JACOBI_OFF_TOL,
    PSD_TOL,
    TRACE_TOL,
)


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a square complex array, raising on anything else."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def num_qubits(a) -> int:
    """Number of qubits ``n`` such that ``a`` is ``2**n x 2**n``."""
    dim = np.shape(a)[0]
    n = int(dim).bit_length() - 1
    if n < 1 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two >= 2")
    return n


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A qubit density matrix.

    The wrapped array is copied and made read-only on construction. Only
    structural checks run eagerly; call :meth:`validate` for the physical
    invariants (Hermitian, unit trace, positive semidefinite).
    """

    mat: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.mat).copy()
        num_qubits(m)
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def qubits(self) -> int:
        return num_qubits(self.mat)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.mat
        return self.mat.astype(dtype)

    def __getitem__(self, idx):
        return self.mat[idx]

    def trace(self) -> complex:
        return complex(np.trace(self.mat))

    def purity(self) -> float:
        return float(np.real(np.trace(self.mat @ self.mat)))

    def validate(self) -> "DensityMatrix":
        """Raise ``ValueError`` unless the density-matrix invariants hold."""
        m = self.mat
        herm_err = float(np.max(np.abs(m - m.conj().T)))
        if herm_err > HERMITIAN_TOL:
            raise ValueError(f"not Hermitian (max deviation {herm_err:.3e})")
        tr = np.trace(m)
        if abs(tr - 1) > TRACE_TOL:
            raise ValueError(f"trace {tr} differs from 1")
        lo = hermitian_eigenvalues(m)[0]
        if lo < -PSD_TOL:
            raise ValueError(f"negative eigenvalue {lo:.3e}")
        return self


def kron(a, b) -> np.ndarray:
    """Kronecker product with ``a`` on the more significant index."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(mats: Iterable) -> np.ndarray:
    mats = list(mats)
    if not mats:
        raise ValueError("kron_all needs at least one factor")
    out = as_matrix(mats[0])
    for m in mats[1:]:
        out = kron(out, m)
    return out


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    m = as_matrix(a)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def _qubit_set(qubits, n: int, what: str) -> list[int]:
    if isinstance(qubits, (int, np.integer)):
        qubits = [int(qubits)]
    qs = [int(q) for q in qubits]
    if not qs:
        raise ValueError(f"{what}: empty qubit set")
    if len(set(qs)) != len(qs):
        raise ValueError(f"{what}: repeated qubit in {qs}")
    for q in qs:
        if not 0 <= q < n:
            raise ValueError(f"{what}: qubit {q} out of range for {n} qubits")
    return qs


def partial_transpose(rho, subsystem) -> np.ndarray:
    """Transpose the row/column indices of the given qubit(s).

    ``subsystem`` is a qubit index or an iterable of indices.
    """
    m = as_matrix(rho)
    n = num_qubits(m)
    qs = _qubit_set(subsystem, n, "partial_transpose")
    t = m.reshape([2] * (2 * n))
    axes = list(range(2 * n))
    for q in qs:
        axes[q], axes[q + n] = axes[q + n], axes[q]
    return np.ascontiguousarray(t.transpose(axes)).reshape(m.shape)


def partial_trace(rho, keep) -> DensityMatrix:
    """Reduced state on the qubits in ``keep`` (strictly increasing)."""
    m = as_matrix(rho)
    n = num_qubits(m)
    keep = _qubit_set(keep, n, "partial_trace")
    if keep != sorted(keep):
        raise ValueError(f"partial_trace: keep must be increasing, got {keep}")
    t = m.reshape([2] * (2 * n))
    # trace from the highest index down so lower axis numbers stay valid
    nleft = n
    for q in reversed(range(n)):
        if q in keep:
            continue
        t = np.trace(t, axis1=q, axis2=q + nleft)
        nleft -= 1
    d = 2 ** len(keep)
    return DensityMatrix(t.reshape(d, d))


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _jacobi_sweeps(a: np.ndarray) -> np.ndarray:
    """Diagonalise Hermitian ``a`` in place by cyclic complex Jacobi rotations."""
    n = a.shape[0]
    scale = max(1.0, float(np.linalg.norm(a)))
    tol = JACOBI_OFF_TOL * scale
    skip = tol / n
    for _ in range(JACOBI_MAX_SWEEPS):
        off = _off_norm(a)
        if off < tol:
            return a
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                mag = abs(b)
                if mag < skip:
                    continue
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ph = np.conj(b) / mag
                g = np.array([[c, s], [-s * ph, c * ph]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = a[q, p] = 0.0
    off = _off_norm(a)
    if off >= tol:
        raise RuntimeError(
            f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (off-norm {off:.3e})"
        )
    return a


def hermitian_eigenvalues(h) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix in ascending order.

    Uses cyclic Jacobi rotations, skipping pairs whose coupling is already
    negligible. Converged when the off-diagonal Frobenius norm drops below
    ``JACOBI_OFF_TOL`` (relative to the matrix norm once that exceeds 1).

    Raises
    ------
    ValueError
        If ``h`` deviates from Hermitian by more than ``EIG_HERMITIAN_TOL``.
    RuntimeError
        If the sweep limit is hit before convergence.
    """
    m = as_matrix(h)
    if not is_hermitian(m, EIG_HERMITIAN_TOL):
        raise ValueError("hermitian_eigenvalues: input is not Hermitian")
    a = 0.5 * (m + m.conj().T)
    a = _jacobi_sweeps(a)
    return np.sort(np.real(np.diag(a)))


def trace_norm(h) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(hermitian_eigenvalues(h))))
