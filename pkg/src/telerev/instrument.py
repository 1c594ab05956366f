"""Effective quantum instrument of a channel + joint measurement, optimal
probabilistic reversal, and the derived performance metrics.

Outcome r of the joint measurement maps the input through the Kraus operator
M_r = E^T W_r^dag.  The reversing filter R_r = sigma_min Q_r Sigma_r^-1 P_r^dag
(from the SVD M_r = P_r Sigma_r Q_r^dag) restores any input exactly with
probability sigma_min^2, independent of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .jointmeas import JointMeasurement
from .linalg import CMatrix, svd
from .qstate import BipartiteState

COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class Instrument:
    """The d^2 effective Kraus operators with sum_r M_r^dag M_r = I."""

    d: int
    kraus: tuple[CMatrix, ...]
    provenance: str


@dataclass(frozen=True)
class ReversalPlan:
    """Per-outcome optimal reversers and their success probabilities.

    Degenerate outcomes (smallest singular value exactly zero) are
    unrecoverable: they carry a zero reverser and zero success probability.
    """

    reversers: tuple[CMatrix, ...]
    outcome_success: np.ndarray
    degenerate: tuple[bool, ...]


@dataclass(frozen=True)
class PerformanceReport:
    """Summary metrics for one channel + measurement pair.

    ``f_tele_mr`` is the fidelity conditioned on successful reversal, which is
    identically 1 for pure resources; it is carried for symmetry with the
    standard-protocol figure.  ``tradeoff_lhs`` is d(d+1) L + (d-1) P, bounded
    by 2d.
    """

    p_succ_max: float
    f_tele_standard: float
    f_tele_mr: float
    leakage_max: float
    tradeoff_lhs: float


def completeness_residual(kraus, d: int) -> float:
    """Max-abs deviation of sum_r M_r^dag M_r from the identity."""
    acc = np.zeros((d, d), dtype=np.complex128)
    for m in kraus:
        acc += m.conj().T @ m
    return float(np.max(np.abs(acc - np.eye(d))))


def build_instrument(channel: BipartiteState, jm: JointMeasurement) -> Instrument:
    """Assemble the instrument M_r = E^T W_r^dag for every outcome r."""
    if channel.d != jm.d:
        raise DimensionError(
            f"channel dimension {channel.d} != measurement dimension {jm.d}")
    et = channel.coeff.T
    kraus = tuple(et @ w.conj().T for w in jm.elements)
    residual = completeness_residual(kraus, channel.d)
    if residual > COMPLETENESS_TOL:
        raise DomainError(f"instrument is not complete: residual {residual:.3e}")
    return Instrument(d=channel.d, kraus=kraus,
                      provenance=f"{channel.label or 'channel'}+{jm.label}")


def apply_kraus_oracle(channel: BipartiteState, jm: JointMeasurement,
                       phi, r: int) -> np.ndarray:
    """Unnormalized post-measurement state by direct tensor contraction.

    Contracts <w_r| against |phi> tensor |Phi> with an explicit sum over all
    d^3 index triples, deliberately avoiding the E^T W_r^dag identity.  Serves
    as the independent oracle for :func:`build_instrument`.
    """
    if channel.d != jm.d:
        raise DimensionError(
            f"channel dimension {channel.d} != measurement dimension {jm.d}")
    v = np.asarray(phi, dtype=np.complex128).ravel()
    d = channel.d
    if v.size != d:
        raise DimensionError(f"input vector has length {v.size}, expected {d}")
    e = channel.coeff
    w = jm.elements[r]
    out = np.zeros(d, dtype=np.complex128)
    for j in range(d):
        acc = 0.0 + 0.0j
        for p in range(d):
            for i in range(d):
                acc += np.conj(w[p, i]) * v[p] * e[i, j]
        out[j] = acc
    return out


def optimal_reversal(inst: Instrument) -> ReversalPlan:
    """Optimal reversing filter and success probability for every outcome."""
    reversers = []
    success = []
    degenerate = []
    for m in inst.kraus:
        res = svd(m)
        smin = float(res.sigmas[-1])
        if smin == 0.0:
            reversers.append(np.zeros_like(m))
            success.append(0.0)
            degenerate.append(True)
            continue
        inv = res.right @ np.diag(1.0 / res.sigmas) @ res.left.conj().T
        reversers.append(smin * inv)
        success.append(smin * smin)
        degenerate.append(False)
    return ReversalPlan(reversers=tuple(reversers),
                        outcome_success=np.array(success),
                        degenerate=tuple(degenerate))


def success_probability(plan: ReversalPlan) -> float:
    """Total success probability sum_r sigma_min^2, input-independent."""
    return float(np.sum(plan.outcome_success))


def leakage_max(inst: Instrument) -> float:
    """Maximum estimation fidelity available to the sender.

    Equals (d + sum_r sigma_max^2) / (d (d + 1)); the optimal per-outcome
    guess is the top eigenvector of M_r^dag M_r.
    """
    d = inst.d
    top = sum(float(svd(m).sigmas[0]) ** 2 for m in inst.kraus)
    return (d + top) / (d * (d + 1))


def standard_fidelity(inst: Instrument) -> float:
    """Average fidelity of the unitary-correction (standard) protocol.

    Bob applies the trace-maximizing polar unitary per outcome, so the
    entanglement fidelity is sum_r nu_r^2 / d^2 with nu_r the nuclear norm of
    M_r, and the average fidelity is (d F_ent + 1)/(d + 1).
    """
    d = inst.d
    f_ent = sum(float(np.sum(svd(m).sigmas)) ** 2 for m in inst.kraus) / d ** 2
    return (d * f_ent + 1.0) / (d + 1.0)


def tradeoff_lhs(inst: Instrument, plan: ReversalPlan) -> float:
    """Left-hand side d(d+1) L_max + (d-1) P_max of the no-cloning bound."""
    d = inst.d
    return d * (d + 1) * leakage_max(inst) + (d - 1) * success_probability(plan)


def reversal_residual(inst: Instrument, plan: ReversalPlan) -> float:
    """Max-abs deviation of R_r M_r from sigma_min^r I over recoverable outcomes."""
    worst = 0.0
    for m, rev, deg, succ in zip(inst.kraus, plan.reversers, plan.degenerate,
                                 plan.outcome_success):
        if deg:
            continue
        smin = np.sqrt(succ)
        worst = max(worst, float(np.max(np.abs(rev @ m - smin * np.eye(inst.d)))))
    return worst


def performance_report(inst: Instrument, plan: ReversalPlan | None = None) -> PerformanceReport:
    """Evaluate all scalar metrics for one instrument."""
    if plan is None:
        plan = optimal_reversal(inst)
    return PerformanceReport(
        p_succ_max=success_probability(plan),
        f_tele_standard=standard_fidelity(inst),
        f_tele_mr=1.0,
        leakage_max=leakage_max(inst),
        tradeoff_lhs=tradeoff_lhs(inst, plan),
    )
