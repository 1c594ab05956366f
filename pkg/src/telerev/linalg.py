"""Dense complex linear algebra for small matrices.

The design envelope is local dimension d <= 8; everything is a plain
complex128 numpy array and all functions are pure, so the module is safe to
use from any number of threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError

# Singular values below this are clamped to exact zeros (rank deficiency).
SIGMA_FLOOR = 1e-12

CMatrix = np.ndarray


def as_matrix(m) -> CMatrix:
    """Coerce ``m`` to a complex matrix, rejecting non-finite entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionError(f"expected a matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise DomainError("matrix entries must be finite")
    return a


def _square(m) -> CMatrix:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def adjoint(m: CMatrix) -> CMatrix:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def matmul(a: CMatrix, b: CMatrix) -> CMatrix:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def det(m: CMatrix) -> complex:
    return complex(np.linalg.det(_square(m)))


def trace(m: CMatrix) -> complex:
    return complex(np.trace(_square(m)))


@dataclass(frozen=True)
class SvdResult:
    """Decomposition m = left @ diag(sigmas) @ right^dagger.

    ``sigmas`` is sorted descending; values below :data:`SIGMA_FLOOR` are
    exactly zero and flagged through ``rank_deficient``.
    """

    left: CMatrix
    sigmas: np.ndarray
    right: CMatrix
    rank_deficient: bool


def svd(m: CMatrix) -> SvdResult:
    """Singular value decomposition of a square matrix."""
    a = _square(m)
    u, s, vh = np.linalg.svd(a)
    s = np.where(s < SIGMA_FLOOR, 0.0, s)
    return SvdResult(left=u, sigmas=s, right=vh.conj().T,
                     rank_deficient=bool(s[-1] == 0.0))


def polar_unitary(m: CMatrix) -> CMatrix:
    """Unitary U maximizing |Tr(U m)|; the maximum equals the nuclear norm of m."""
    res = svd(m)
    return res.right @ res.left.conj().T
