"""Dense complex linear algebra for 2x2 and 4x4 operators.

Everything the rest of the package touches is a small complex matrix:
single-qubit projectors, two-qubit density matrices, and the game
operator. This module supplies the handful of operations they need
(products, Kronecker products, traces) plus a cyclic-Jacobi eigensolver
for Hermitian matrices of these sizes. No attempt is made to scale past
dimension 4.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

VALID_DIMS = (2, 4)

HERMITICITY_TOL = 1e-10
JACOBI_OFFDIAG_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

# pivot orders for the cyclic sweeps
_PIVOTS = {
    2: ((0, 1),),
    4: ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
}


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


IDENTITY_2 = _readonly(np.eye(2, dtype=complex))
IDENTITY_4 = _readonly(np.eye(4, dtype=complex))
PAULI_X = _readonly(np.array([[0, 1], [1, 0]], dtype=complex))
PAULI_Y = _readonly(np.array([[0, -1j], [1j, 0]], dtype=complex))
PAULI_Z = _readonly(np.array([[1, 0], [0, -1]], dtype=complex))


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi iteration hits its sweep cap."""


def as_matrix(a, dims: tuple[int, ...] = VALID_DIMS) -> np.ndarray:
    """Validate a square complex matrix of an allowed dimension.

    Returns a complex128 copy-free view when possible. Rejects
    non-square shapes, unsupported dimensions and non-finite entries.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] not in dims:
        raise ValueError(f"unsupported dimension {m.shape[0]}, expected one of {dims}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product of two equal-dimension matrices."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices, a[0,0]*b in the top-left block."""
    a = as_matrix(a, dims=(2,))
    b = as_matrix(b, dims=(2,))
    out = np.empty((4, 4), dtype=complex)
    out[:2, :2] = a[0, 0] * b
    out[:2, 2:] = a[0, 1] * b
    out[2:, :2] = a[1, 0] * b
    out[2:, 2:] = a[1, 1] * b
    return out


def trace(a) -> complex:
    """Sum of diagonal entries."""
    return complex(as_matrix(a).trace())


def hermiticity_defect(a) -> float:
    """Max entrywise |a - a^dagger|."""
    m = np.asarray(a, dtype=complex)
    return float(np.abs(m - m.conj().T).max())


def is_hermitian(a, tol: float = HERMITICITY_TOL) -> bool:
    return hermiticity_defect(a) <= tol


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order with matching unit eigenvectors.

    ``eigenvectors[:, k]`` belongs to ``eigenvalues[k]``. Within a
    degenerate cluster the individual vectors are basis-arbitrary; only
    the spanned subspace is meaningful.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _readonly(np.array(self.eigenvalues, dtype=float)))
        object.__setattr__(self, "eigenvectors", _readonly(np.array(self.eigenvectors, dtype=complex)))


def hermitian_eigen(a, tol: float = JACOBI_OFFDIAG_TOL,
                    max_sweeps: int = JACOBI_MAX_SWEEPS) -> Spectrum:
    """Full spectrum of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation annihilates one off-diagonal pivot: the pivot's phase
    is absorbed into a diagonal unitary, then a real plane rotation
    zeroes it. Sweeps stop once the off-diagonal Frobenius norm falls
    below ``tol``.

    Raises ValueError for non-Hermitian input and ConvergenceError if
    ``max_sweeps`` full sweeps do not reach the threshold.
    """
    m = as_matrix(a)
    if not is_hermitian(m):
        raise ValueError("hermitian_eigen requires a Hermitian matrix "
                         f"(defect {hermiticity_defect(m):.3e} > {HERMITICITY_TOL:.0e})")
    n = m.shape[0]
    work = np.array(m, dtype=complex)
    vecs = np.eye(n, dtype=complex)
    pivots = _PIVOTS[n]

    def converged() -> bool:
        off = np.abs(work) ** 2
        off[np.diag_indices(n)] = 0.0
        return bool(np.sqrt(off.sum()) <= tol)

    for _ in range(max_sweeps):
        if converged():
            return _sorted_spectrum(work, vecs)
        for p, q in pivots:
            apq = work[p, q]
            r = abs(apq)
            if r == 0.0:
                continue
            # diag(1, conj(apq)/r) makes the pivot real; then a plane
            # rotation by theta zeroes it.
            w = apq.conjugate() / r
            theta = 0.5 * np.arctan2(2.0 * r, work[p, p].real - work[q, q].real)
            c = np.cos(theta)
            s = np.sin(theta)
            rot = np.eye(n, dtype=complex)
            rot[p, p] = c
            rot[p, q] = -s
            rot[q, p] = w * s
            rot[q, q] = w * c
            work = rot.conj().T @ work @ rot
            vecs = vecs @ rot

    if converged():
        return _sorted_spectrum(work, vecs)
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def _sorted_spectrum(diagonalized: np.ndarray, vecs: np.ndarray) -> Spectrum:
    vals = diagonalized.diagonal().real
    # stable sort keeps Jacobi output order among ties
    order = np.argsort(-vals, kind="stable")
    return Spectrum(eigenvalues=vals[order], eigenvectors=vecs[:, order])
