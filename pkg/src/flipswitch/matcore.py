"""Dense complex linear algebra for few-qubit operators.

All values are plain ``numpy.ndarray`` objects with dtype complex128:
square matrices of dimension 2, 4 or 8 and unit-norm state vectors.
Functions never mutate their inputs and always return fresh arrays, so
values can be shared freely between threads.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import ConfigurationError, NumericContractError

HERMITIAN_TOL = 1e-10
DENSITY_TRACE_TOL = 1e-10
DENSITY_EIG_TOL = 1e-9
STATE_NORM_TOL = 1e-12
NEGATIVE_EIG_LIMIT = -1e-6
# Eigenvalues of a PSD matrix below this floor are an exact numerical zero.
# Flooring them before a square root keeps the error of the root at O(eps)
# instead of O(sqrt(eps)) on rank-deficient inputs.
ZERO_EIG_FLOOR = 1e-13

ID2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

KET_ZERO = np.array([1.0, 0.0], dtype=complex)
KET_ONE = np.array([0.0, 1.0], dtype=complex)
KET_PLUS = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0)
KET_MINUS = np.array([1.0, -1.0], dtype=complex) / np.sqrt(2.0)
# Maximally entangled two-qubit state (|00> + |11>)/sqrt(2).
BELL_KET = np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / np.sqrt(2.0)


def pure_state(amplitudes: Sequence[complex]) -> np.ndarray:
    """Return a normalized state vector, validating the unit norm."""
    ket = np.asarray(amplitudes, dtype=complex).reshape(-1)
    norm_sq = float(np.sum(np.abs(ket) ** 2))
    if abs(norm_sq - 1.0) > STATE_NORM_TOL:
        raise NumericContractError(
            f"state vector norm^2 = {norm_sq!r} deviates from 1 by more than {STATE_NORM_TOL}"
        )
    return ket


def density(ket: np.ndarray) -> np.ndarray:
    """Projector |ket><ket| of a (normalized) state vector."""
    ket = np.asarray(ket, dtype=complex).reshape(-1)
    return np.outer(ket, ket.conj())


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the left argument as the most significant factor."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ConfigurationError(f"expected a square matrix, got shape {m.shape}")
    return m


def partial_trace(m: np.ndarray, factor_dims: Sequence[int], traced_index: int) -> np.ndarray:
    """Trace out one tensor factor of a multipartite operator.

    ``factor_dims`` lists the dimension of every tensor factor (most
    significant first, matching :func:`tensor`); ``traced_index`` selects
    the factor to remove.
    """
    m = _as_square(m)
    dims = [int(d) for d in factor_dims]
    if int(np.prod(dims)) != m.shape[0]:
        raise ConfigurationError(
            f"factor dims {dims} do not multiply to the matrix dimension {m.shape[0]}"
        )
    if not 0 <= traced_index < len(dims):
        raise ConfigurationError(f"traced index {traced_index} out of range for {len(dims)} factors")
    n = len(dims)
    t = m.reshape(dims + dims)
    t = np.trace(t, axis1=traced_index, axis2=traced_index + n)
    kept = [d for i, d in enumerate(dims) if i != traced_index]
    d_out = int(np.prod(kept)) if kept else 1
    return t.reshape(d_out, d_out)


def permute_factors(m: np.ndarray, factor_dims: Sequence[int], order: Sequence[int]) -> np.ndarray:
    """Reorder the tensor factors of an operator.

    ``order[k]`` names which of the old factors becomes the new k-th one.
    """
    m = _as_square(m)
    dims = [int(d) for d in factor_dims]
    if int(np.prod(dims)) != m.shape[0]:
        raise ConfigurationError(
            f"factor dims {dims} do not multiply to the matrix dimension {m.shape[0]}"
        )
    if sorted(order) != list(range(len(dims))):
        raise ConfigurationError(f"{order!r} is not a permutation of the {len(dims)} factors")
    n = len(dims)
    t = m.reshape(dims + dims)
    axes = list(order) + [p + n for p in order]
    t = t.transpose(axes)
    return t.reshape(m.shape)


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m, dtype=complex)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def hermitian_eigen(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with the eigenvalues sorted in
    descending order and the eigenvectors as matching columns.
    """
    m = _as_square(m)
    if not is_hermitian(m):
        raise NumericContractError(
            f"matrix deviates from hermiticity by more than {HERMITIAN_TOL}"
        )
    w, v = np.linalg.eigh(m)
    return w[::-1].copy(), v[:, ::-1].copy()


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues below ``NEGATIVE_EIG_LIMIT`` are rejected; small negative
    round-off and sub-``ZERO_EIG_FLOOR`` positives are treated as exact zeros.
    """
    w, v = hermitian_eigen(m)
    if float(w.min()) < NEGATIVE_EIG_LIMIT:
        raise NumericContractError(
            f"matrix has a significantly negative eigenvalue {w.min()!r}"
        )
    w = np.where(w < ZERO_EIG_FLOOR, 0.0, w)
    return (v * np.sqrt(w)) @ v.conj().T


def check_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Validate hermiticity, unit trace and positivity of a density matrix."""
    rho = _as_square(rho)
    if not is_hermitian(rho):
        raise NumericContractError("density matrix is not Hermitian within tolerance")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise NumericContractError(f"density matrix trace {tr!r} deviates from 1")
    w = np.linalg.eigvalsh(rho)
    if float(w.min()) < -DENSITY_EIG_TOL:
        raise NumericContractError(f"density matrix has negative eigenvalue {w.min()!r}")
    return rho
