"""Closed-form success-probability laws and their dimension-d bounds.

For qubits the maximum success probability of faithful teleportation for a
single outcome is a closed function of the channel concurrence E_c, the
element concurrence E_r, and the Bloch alignment x_r between the reduced
channel and element operators.  For d > 2 only a sandwich of bounds in the
per-element G-concurrence is available; the lower bound comes from the unique
root of g(t) = t ((1-t)/(d-1))^(d-1) on [0, 1/d].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .jointmeas import JointMeasurement, element_bloch, element_entanglement
from .qstate import BipartiteState, channel_bloch, concurrence

__all__ = ["Thm1Inputs", "Thm2Bounds", "thm1_outcome_success", "alignment_x",
           "thm1_total_success", "g_of_t", "solve_tr", "tr_closed_form_d3",
           "thm2_bounds", "saturating_spectrum", "random_basis"]

_RANGE_TOL = 1e-9


@dataclass(frozen=True)
class Thm1Inputs:
    """Scalar inputs of the qubit closed form.

    ``x_r`` may be None when either Bloch radius vanishes; the alignment term
    is then analytically zero regardless of direction.
    """

    e_c: float
    e_r: float
    x_r: float | None


@dataclass(frozen=True)
class Thm2Bounds:
    """Sandwich lower <= P_succ_max <= upper with the per-outcome roots t_r."""

    lower: float
    upper: float
    t_values: tuple[float, ...]


def _unit_interval(value: float, name: str) -> float:
    if not (-_RANGE_TOL <= value <= 1.0 + _RANGE_TOL):
        raise DomainError(f"{name}={value!r} outside [0, 1]")
    return min(max(float(value), 0.0), 1.0)


def thm1_outcome_success(inp: Thm1Inputs) -> float:
    """Closed-form maximum success probability of one outcome (d = 2).

    Evaluates (1/4)[(1 + u v x) - sqrt((1 + u v x)^2 - (E_c E_r)^2)] with
    u = sqrt(1 - E_c^2), v = sqrt(1 - E_r^2).  The root argument is expanded
    into the exactly equal sum of squares (u + v x)^2 + v^2 (1 - x^2) E_c^2
    and the outer subtraction is replaced by its reciprocal form; both
    rewrites avoid catastrophic cancellation near alignment ties, where the
    naive expression loses seven digits.
    """
    e_c = _unit_interval(inp.e_c, "e_c")
    e_r = _unit_interval(inp.e_r, "e_r")
    if inp.x_r is not None and not (-1.0 - _RANGE_TOL <= inp.x_r <= 1.0 + _RANGE_TOL):
        raise DomainError(f"x_r={inp.x_r!r} outside [-1, 1]")
    u = math.sqrt((1.0 - e_c) * (1.0 + e_c))
    v = math.sqrt((1.0 - e_r) * (1.0 + e_r))
    return _closed_form(e_c, e_r, u, v, inp.x_r)


def _closed_form(e_c: float, e_r: float, u: float, v: float,
                 x_r: float | None) -> float:
    # u, v are the Bloch radii sqrt(1 - E^2); passing them explicitly lets
    # callers that know them to full precision (from operator traces) avoid
    # the ill-conditioned sqrt near E = 1.
    x = 0.0 if x_r is None else min(max(float(x_r), -1.0), 1.0)
    if 1.0 - abs(x) < 1e-12:
        # unit-vector dot products cannot exceed 1; snapping keeps the
        # (anti)parallel discriminant (u -+ v)^2 free of sqrt-amplified noise
        x = math.copysign(1.0, x)
    b = e_c * e_r
    if b == 0.0:
        return 0.0
    a = 1.0 + u * v * x
    disc = (u + v * x) ** 2 + v * v * (1.0 - x * x) * e_c * e_c
    return b * b / (4.0 * (a + math.sqrt(disc)))


def alignment_x(channel: BipartiteState, jm: JointMeasurement, r: int) -> float | None:
    """Bloch alignment u . n_r of the channel and measurement element r.

    Returns None when either Bloch radius is below the direction floor.
    """
    if channel.d != 2 or jm.d != 2:
        raise DimensionError("alignment is defined for qubits only")
    u = channel_bloch(channel)
    n = element_bloch(jm, r)
    if u.direction is None or n.direction is None:
        return None
    return float(np.dot(u.direction, n.direction))


def thm1_total_success(channel: BipartiteState, jm: JointMeasurement) -> float:
    """Closed-form total success probability summed over the four outcomes."""
    if channel.d != 2 or jm.d != 2:
        raise DimensionError("the closed form is defined for qubits only")
    e_c = concurrence(channel)
    u_pt = channel_bloch(channel)
    total = 0.0
    for r in range(len(jm.elements)):
        n_pt = element_bloch(jm, r)
        x = None
        if u_pt.direction is not None and n_pt.direction is not None:
            x = float(np.dot(u_pt.direction, n_pt.direction))
        total += _closed_form(min(e_c, 1.0), min(element_entanglement(jm, r), 1.0),
                              u_pt.radius, n_pt.radius, x)
    return total


def g_of_t(d: int, t: float) -> float:
    """g(t) = t ((1-t)/(d-1))^(d-1), strictly increasing on [0, 1/d]."""
    return t * ((1.0 - t) / (d - 1)) ** (d - 1)


def solve_tr(d: int, e_r: float) -> float:
    """Unique t in [0, 1/d] with g(t) = (e_r/d)^d, by bisection."""
    e_r = _unit_interval(e_r, "e_r")
    if e_r == 0.0:
        return 0.0
    if e_r == 1.0:
        return 1.0 / d
    target = (e_r / d) ** d
    lo, hi = 0.0, 1.0 / d
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g_of_t(d, mid) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-17:
            break
    return 0.5 * (lo + hi)


def tr_closed_form_d3(e_r: float) -> float:
    """Closed-form root for d = 3 via the trigonometric cubic solution."""
    e_r = _unit_interval(e_r, "e_r")
    c = min(max(2.0 * e_r ** 3 - 1.0, -1.0), 1.0)
    return 2.0 / 3.0 + 2.0 / 3.0 * math.cos(math.acos(c) / 3.0 + 2.0 * math.pi / 3.0)


def thm2_bounds(d: int, e_list) -> Thm2Bounds:
    """Success-probability sandwich for a maximally entangled channel.

    Args:
        d: local dimension, >= 2.
        e_list: the d^2 per-outcome G-concurrences of the measurement.
    """
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    es = [_unit_interval(e, f"e_list[{i}]") for i, e in enumerate(e_list)]
    if len(es) != d * d:
        raise DomainError(f"expected {d * d} entanglement values, got {len(es)}")
    ts = tuple(solve_tr(d, e) for e in es)
    return Thm2Bounds(lower=sum(ts) / d, upper=sum(es) / d ** 2, t_values=ts)


def saturating_spectrum(d: int, e_r: float) -> np.ndarray:
    """Singular values attaining the lower bound for a given G-concurrence.

    The first d-1 values equal sqrt((1-t_r)/(d-1)) and the last equals
    sqrt(t_r); their squares sum to one.
    """
    t = solve_tr(d, e_r)
    lam = np.full(d, math.sqrt((1.0 - t) / (d - 1)))
    lam[-1] = math.sqrt(t)
    return lam


def random_basis(d: int, rng: np.random.Generator) -> JointMeasurement:
    """Complete orthonormal measurement from a Haar-random d^2 x d^2 unitary.

    The unitary mixes the computational product basis; column r, reshaped
    row-major to d x d, becomes the coefficient matrix W_r.
    """
    n = d * d
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    q = q * phases
    elements = tuple(q[:, k].reshape(d, d) for k in range(n))
    return JointMeasurement(d=d, elements=elements, label=f"random(d={d})")
