"""Pure bipartite states as coefficient matrices.

A pure state |Phi> = sum_ij E_ij |i>|j> is stored through its d x d
coefficient matrix E with Tr(E^dag E) = 1.  The module provides the channel
families used throughout the package, the two-qubit concurrence and its
d-dimensional generalization, and the Bloch geometry of reduced operators.

Convention: the Pauli vector is (sigma_x, sigma_y, sigma_z) in the
computational basis, and the reduced channel operator is A = conj(E) @ E.T
(not E^dag E; the two differ for complex E).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .linalg import CMatrix, as_matrix, svd

NORM_TOL = 1e-10
# Bloch radii below this have no meaningful direction (reported as None).
DIR_FLOOR = 1e-9
_RANGE_TOL = 1e-12

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


@dataclass(frozen=True)
class BipartiteState:
    """Pure bipartite state on d x d, held as its coefficient matrix."""

    d: int
    coeff: CMatrix
    label: str = ""

    def __post_init__(self):
        e = as_matrix(self.coeff)
        if self.d < 2:
            raise DimensionError(f"local dimension must be >= 2, got {self.d}")
        if e.shape != (self.d, self.d):
            raise DimensionError(
                f"coefficient matrix has shape {e.shape}, expected {(self.d, self.d)}")
        norm = float(np.real(np.trace(e.conj().T @ e)))
        if abs(norm - 1.0) > NORM_TOL:
            raise DomainError(f"state is not normalized: Tr(E^dag E) = {norm!r}")
        object.__setattr__(self, "coeff", e)

    @classmethod
    def from_vector(cls, vec, label: str = "") -> "BipartiteState":
        """Build a state from d^2 amplitudes ordered as |i>|j> (row-major)."""
        v = np.asarray(vec, dtype=np.complex128).ravel()
        d = math.isqrt(v.size)
        if d * d != v.size:
            raise DimensionError(f"amplitude vector of length {v.size} is not square")
        return cls(d=d, coeff=v.reshape(d, d), label=label)


@dataclass(frozen=True)
class BlochPoint:
    """Bloch vector of a single-qubit positive unit-trace operator.

    ``direction`` is None when the radius is below :data:`DIR_FLOOR`; callers
    must treat a missing direction as contributing zero to any alignment term.
    """

    radius: float
    direction: np.ndarray | None


def _check_angle(value: float, lo: float, hi: float, name: str) -> float:
    if not (lo - _RANGE_TOL <= value <= hi + _RANGE_TOL):
        raise DomainError(f"{name}={value!r} outside [{lo!r}, {hi!r}]")
    return float(min(max(value, lo), hi))


def max_entangled(d: int) -> BipartiteState:
    """Maximally entangled state with coefficient matrix I/sqrt(d)."""
    if d < 2:
        raise DimensionError(f"local dimension must be >= 2, got {d}")
    return BipartiteState(d=d, coeff=np.eye(d) / math.sqrt(d),
                          label=f"max_entangled(d={d})")


def schmidt_channel(phi: float, basis: str = "z") -> BipartiteState:
    """Two-qubit Schmidt-form channel cos(phi)|00> + sin(phi)|11>.

    Args:
        phi: Schmidt angle in [0, pi/4]; the concurrence is sin(2 phi).
        basis: "z" for the computational basis, "y" for the same state written
            in the sigma_y eigenbasis |0_y>, |1_y>.
    """
    phi = _check_angle(phi, 0.0, math.pi / 4, "phi")
    c, s = math.cos(phi), math.sin(phi)
    b = basis.lower()
    if b == "z":
        coeff = np.array([[c, 0.0], [0.0, s]], dtype=np.complex128)
    elif b == "y":
        # |0_y> = (|0> + i|1>)/sqrt2, |1_y> = (|0> - i|1>)/sqrt2
        coeff = 0.5 * np.array([[c + s, 1j * (c - s)],
                                [1j * (c - s), -(c + s)]], dtype=np.complex128)
    else:
        raise DomainError(f"unknown basis {basis!r}; expected 'z' or 'y'")
    return BipartiteState(d=2, coeff=coeff, label=f"schmidt(phi={phi:.6g},{b})")


def ejm_channel(s: float) -> BipartiteState:
    """Channel family aligned with outcome 0 of the elegant joint measurement.

    Its reduced Bloch direction is antiparallel to the measurement direction
    n_0 and its concurrence is sqrt(1 - (3/4) cos^2 s) for s in [0, pi/2].
    """
    s = _check_angle(s, 0.0, math.pi / 2, "s")
    pm = (1.0 - np.exp(-1j * s)) / math.sqrt(2)
    pp = (1.0 + np.exp(-1j * s)) / math.sqrt(2)
    coeff = 0.5 * np.array([[np.exp(-1j * math.pi / 4), pm],
                            [pp, np.exp(-3j * math.pi / 4)]], dtype=np.complex128)
    return BipartiteState(d=2, coeff=coeff, label=f"ejm_channel(s={s:.6g})")


def concurrence(state: BipartiteState) -> float:
    """Two-qubit concurrence 2|det E| of a pure state."""
    if state.d != 2:
        raise DimensionError("concurrence is defined for d=2; use g_concurrence")
    return 2.0 * abs(np.linalg.det(state.coeff))


def g_concurrence(state: BipartiteState) -> float:
    """G-concurrence d * (prod of singular values of E)^(2/d).

    Coincides with the concurrence for d = 2 and vanishes on rank-deficient
    coefficient matrices.
    """
    sigmas = svd(state.coeff).sigmas
    prod = float(np.prod(sigmas))
    return state.d * prod ** (2.0 / state.d)


def channel_operator(state: BipartiteState) -> CMatrix:
    """Reduced channel operator A = conj(E) @ E.T (positive, unit trace)."""
    e = state.coeff
    return e.conj() @ e.T


def reduced_bloch(op: CMatrix) -> BlochPoint:
    """Bloch decomposition op = (I + r n.sigma)/2 of a positive 2x2 operator.

    Raises DomainError when ``op`` is not Hermitian positive with unit trace
    (all within 1e-10).
    """
    a = as_matrix(op)
    if a.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 operator, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T)) > NORM_TOL:
        raise DomainError("operator is not Hermitian")
    if abs(np.trace(a).real - 1.0) > NORM_TOL or abs(np.trace(a).imag) > NORM_TOL:
        raise DomainError("operator does not have unit trace")
    if np.linalg.eigvalsh(a)[0] < -NORM_TOL:
        raise DomainError("operator is not positive semidefinite")
    vec = np.array([np.trace(a @ p).real for p in PAULIS])
    radius = float(np.linalg.norm(vec))
    if radius < DIR_FLOOR:
        return BlochPoint(radius=radius, direction=None)
    return BlochPoint(radius=radius, direction=vec / radius)


def channel_bloch(state: BipartiteState) -> BlochPoint:
    """Bloch point of the reduced channel operator A = conj(E) @ E.T."""
    return reduced_bloch(channel_operator(state))
