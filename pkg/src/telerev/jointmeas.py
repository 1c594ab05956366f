"""Rank-one joint-measurement families on two qudits.

A joint measurement is a complete orthonormal set of d^2 entangled kets
|w_r>, each stored as its d x d coefficient matrix W_r with
Tr(W_r^dag W_s) = delta_rs.  Global phases of the kets are kept exactly as
defined by each family; downstream reversal-operator cross-checks are
phase-sensitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import CMatrix, svd
from .qstate import BlochPoint, _check_angle, reduced_bloch

ZX_ZZ_LIMIT = math.sqrt(3) * math.pi / 4


@dataclass(frozen=True)
class JointMeasurement:
    """d^2 rank-one measurement elements as coefficient matrices W_r."""

    d: int
    elements: tuple[CMatrix, ...]
    label: str


@dataclass(frozen=True)
class BasisReport:
    """Max-abs deviations from orthonormality and basis completeness."""

    ortho_residual: float
    completeness_residual: float


def xx_deformed(t: float) -> JointMeasurement:
    """Rotated Bell basis from an under-driven XX entangler.

    The rotation angle is theta = pi/4 - t for t in [0, pi/4]; every element
    has concurrence cos(2t).  t = 0 is the ideal limit.
    """
    t = _check_angle(t, 0.0, math.pi / 4, "t")
    th = math.pi / 4 - t
    s, c = math.sin(th), math.cos(th)
    elements = (
        np.array([[s, 0.0], [0.0, 1j * c]], dtype=np.complex128),
        np.array([[0.0, s], [1j * c, 0.0]], dtype=np.complex128),
        np.array([[c, 0.0], [0.0, -1j * s]], dtype=np.complex128),
        np.array([[0.0, c], [-1j * s, 0.0]], dtype=np.complex128),
    )
    return JointMeasurement(d=2, elements=elements, label=f"xx_deformed(t={t:.6g})")


def bell_basis() -> JointMeasurement:
    """Ideal (maximally entangled) basis, i.e. the t = 0 limit of xx_deformed.

    The phase convention is inherited from the rotated family, so each element
    is a unitary matrix divided by sqrt(2).
    """
    jm = xx_deformed(0.0)
    return JointMeasurement(d=2, elements=jm.elements, label="bell")


def ejm(t: float) -> JointMeasurement:
    """Elegant joint measurement, iso-entangled for every t in [0, pi/2].

    All four elements have concurrence sqrt(1 - (3/4) cos^2 t); their reduced
    Bloch vectors share the radius (sqrt(3)/2) cos t and point to the corners
    of a regular tetrahedron.  t = pi/2 is locally Bell-equivalent.
    """
    t = _check_angle(t, 0.0, math.pi / 2, "t")
    pm = (1.0 - np.exp(-1j * t)) / math.sqrt(2)
    pp = (1.0 + np.exp(-1j * t)) / math.sqrt(2)
    e = lambda k: np.exp(1j * k * math.pi / 4)
    elements = (
        0.5 * np.array([[e(-1), pm], [pp, e(-3)]], dtype=np.complex128),
        0.5 * np.array([[e(3), pm], [pp, e(1)]], dtype=np.complex128),
        0.5 * np.array([[e(1), -pp], [-pm, e(3)]], dtype=np.complex128),
        0.5 * np.array([[e(-3), -pp], [-pm, e(-1)]], dtype=np.complex128),
    )
    return JointMeasurement(d=2, elements=elements, label=f"ejm(t={t:.6g})")


def zx_zz(t: float) -> JointMeasurement:
    """Deformed Bell basis of a ZX entangler with a coherent ZZ error.

    Valid for 0 <= t < sqrt(3) pi/4.  With R(t) = sqrt(pi^2 + 16 t^2)/4 the
    element concurrence is |sin 2R(t)|, which decreases monotonically from 1
    at t = 0 towards 0 at the (excluded) upper end of the range.
    """
    if not (-1e-12 <= t < ZX_ZZ_LIMIT):
        raise DomainError(f"t={t!r} outside [0, {ZX_ZZ_LIMIT!r})")
    t = max(t, 0.0)
    big_r = math.sqrt(math.pi ** 2 + 16.0 * t * t) / 4.0
    sr, cr = math.sin(big_r), math.cos(big_r)
    a = math.pi / (4.0 * big_r) * sr
    c = t / big_r * sr
    alpha = a + cr + 1j * c
    beta = 1j * (a - cr) - c
    al, be = alpha, beta
    elements = (
        0.5 * np.array([[al, be], [-be, al]], dtype=np.complex128),
        0.5 * np.array([[-be.conjugate(), al.conjugate()],
                        [al.conjugate(), be.conjugate()]], dtype=np.complex128),
        0.5 * np.array([[al, be], [be, -al]], dtype=np.complex128),
        0.5 * np.array([[-be.conjugate(), al.conjugate()],
                        [-al.conjugate(), -be.conjugate()]], dtype=np.complex128),
    )
    return JointMeasurement(d=2, elements=elements, label=f"zx_zz(t={t:.6g})")


def validate(jm: JointMeasurement) -> BasisReport:
    """Report orthonormality and completeness residuals (never raises)."""
    n = len(jm.elements)
    vecs = np.stack([w.ravel() for w in jm.elements])
    gram = vecs.conj() @ vecs.T
    ortho = float(np.max(np.abs(gram - np.eye(n))))
    comp = vecs.T @ vecs.conj()
    completeness = float(np.max(np.abs(comp - np.eye(jm.d * jm.d))))
    return BasisReport(ortho_residual=ortho, completeness_residual=completeness)


def element_entanglement(jm: JointMeasurement, r: int) -> float:
    """Entanglement of element r: concurrence for d=2, G-concurrence otherwise."""
    w = jm.elements[r]
    if jm.d == 2:
        return 2.0 * abs(np.linalg.det(w))
    prod = float(np.prod(svd(w).sigmas))
    return jm.d * prod ** (2.0 / jm.d)


def element_bloch(jm: JointMeasurement, r: int) -> BlochPoint:
    """Bloch point of the reduced element operator B_r = W_r^dag W_r."""
    w = jm.elements[r]
    return reduced_bloch(w.conj().T @ w)
