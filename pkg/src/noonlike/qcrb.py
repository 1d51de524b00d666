"""Quantum Fisher information and Cramer-Rao bounds for NOON-like probes.

The probe is a (d+1)-mode superposition in which one mode carries a
constituent state and the rest are vacuum; ``d`` phases are imprinted one
per non-reference mode, with the reference-mode phase fixed to zero.  For
this family the Fisher matrix is phase independent and has the structure
``a I - c O`` (O = all-ones), so the bound has both a closed form and an
independent dense-inversion route; both are exposed.

Pure functions over immutable inputs throughout; thread-safe by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstraintInfeasible,
    DegenerateOverlap,
    DenominatorNonPositive,
    FOutOfRange,
    NonPositivePhotonNumber,
    SingularMatrix,
    ZeroPhotonState,
)
from .states import Fock, Moments, SingleModeState, moments

__all__ = [
    "Balanced",
    "FixedB",
    "OptimizedB",
    "Weighting",
    "ProbeSpec",
    "QcrbReport",
    "QfiMatrix",
    "balanced_b2",
    "mean_total_photons",
    "qfi_matrix",
    "qcrb_trace_inverse",
    "qcrb_closed_form",
    "qcrb_from_f",
    "noon_qcrb",
    "noon_bound_check",
]

_COND_LIMIT = 1e12
_BOUND_TOL = 1e-12


@dataclass(frozen=True)
class Balanced:
    """Reference mode carries the same weight as each probing mode."""


@dataclass(frozen=True)
class FixedB:
    """Probing-mode weight b^2 fixed by the caller (unbalanced state)."""

    b2: float


@dataclass(frozen=True)
class OptimizedB:
    """Probing-mode weight minimizing the bound subject to normalization."""


Weighting = Balanced | FixedB | OptimizedB


@dataclass(frozen=True)
class ProbeSpec:
    d: int
    state: SingleModeState
    weighting: Weighting = Balanced()

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d}")
        object.__setattr__(self, "d", int(self.d))


@dataclass(frozen=True)
class QcrbReport:
    """Bound value plus all intermediate quantities, for auditing.

    qcrb is in radians^2 (lower bound on the summed phase variance).
    """

    qcrb: float
    f: float
    R: float
    b2: float
    n_tilde: float
    n_bar: float
    family: str = ""
    parameter: float | None = None
    effective: bool = False


@dataclass(frozen=True)
class QfiMatrix:
    """Dense d x d Fisher matrix of the form a I - c O."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("entries must be a square matrix")
        if not np.allclose(m, m.T, rtol=0.0, atol=1e-9 * max(1.0, float(np.max(np.abs(m))))):
            raise ValueError("entries must be symmetric")
        object.__setattr__(self, "entries", m)
        m.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def balanced_b2(d: int, vacuum_prob: float) -> float:
    """Squared weight of each component of the balanced (d+1)-mode state."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not 0.0 <= vacuum_prob <= 1.0:
        raise ValueError(f"vacuum_prob outside [0, 1]: {vacuum_prob}")
    return 1.0 / ((d + 1) * (1.0 + d * vacuum_prob))


def _b_boundary(d: int, vacuum_prob: float) -> float:
    """Largest b^2 compatible with the unbalanced normalization ellipse."""
    if vacuum_prob >= 1.0:
        raise DegenerateOverlap("vacuum overlap of 1 leaves no photons to weight")
    return 1.0 / (d * (1.0 + d * vacuum_prob) * (1.0 - vacuum_prob))


def _optimal_b2(d: int, vacuum_prob: float, big_r: float) -> float:
    """Bound-minimizing b^2: stationary point if feasible, else the boundary."""
    return min(big_r / (d + math.sqrt(d)), _b_boundary(d, vacuum_prob))


def _resolve_b2(d: int, m: Moments, weighting: Weighting) -> float:
    if isinstance(weighting, Balanced):
        return balanced_b2(d, m.vacuum_prob)
    if isinstance(weighting, FixedB):
        b2 = float(weighting.b2)
        bo = _b_boundary(d, m.vacuum_prob)
        if not 0.0 < b2 <= bo * (1.0 + 1e-9):
            raise ConstraintInfeasible(f"b2={b2} outside (0, {bo}]")
        return b2
    if isinstance(weighting, OptimizedB):
        if m.mean_n <= 0.0:
            raise ZeroPhotonState("cannot optimize weights for a zero-photon state")
        return _optimal_b2(d, m.vacuum_prob, m.mean_n2 / m.mean_n**2)
    raise TypeError(f"not a Weighting: {weighting!r}")


def mean_total_photons(d: int, state: SingleModeState) -> float:
    """Mean total photon number of the balanced (d+1)-mode probe."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    m = moments(state)
    return m.mean_n / (1.0 + d * m.vacuum_prob)


def qfi_matrix(spec: ProbeSpec) -> QfiMatrix:
    """Fisher matrix 4 b^2 <n^2> I - 4 b^4 <n>^2 O for the d phases."""
    m = moments(spec.state)
    if m.mean_n2 <= 0.0:
        raise ZeroPhotonState("vacuum constituent has no Fisher information")
    b2 = _resolve_b2(spec.d, m, spec.weighting)
    a = 4.0 * b2 * m.mean_n2
    c = 4.0 * b2 * b2 * m.mean_n**2
    entries = a * np.eye(spec.d) - c * np.ones((spec.d, spec.d))
    return QfiMatrix(entries)


def qcrb_trace_inverse(matrix: QfiMatrix) -> float:
    """Trace of the dense matrix inverse.

    Deliberately generic (LAPACK LU with pivoting, no use of the rank-one
    structure) so it can serve as an independent oracle for the closed form.
    """
    m = matrix.entries
    if np.linalg.cond(m) > _COND_LIMIT:
        raise SingularMatrix(f"condition number exceeds {_COND_LIMIT:.0e}")
    return float(np.trace(np.linalg.inv(m)))


def qcrb_closed_form(spec: ProbeSpec) -> QcrbReport:
    """Closed-form lower bound d/(4<n^2>) (1/b^2 + 1/(R - b^2 d))."""
    m = moments(spec.state)
    if m.mean_n <= 0.0 or m.mean_n2 <= 0.0:
        raise ZeroPhotonState("vacuum constituent: bound undefined")
    d = spec.d
    b2 = _resolve_b2(d, m, spec.weighting)
    big_r = m.mean_n2 / m.mean_n**2
    denom = big_r - b2 * d
    if denom <= 0.0:
        raise DenominatorNonPositive(
            f"R - b^2 d = {denom} <= 0; valid inputs cannot reach this"
        )
    value = d / (4.0 * m.mean_n2) * (1.0 / b2 + 1.0 / denom)
    return QcrbReport(
        qcrb=value,
        f=m.mean_n / m.mean_n2,
        R=big_r,
        b2=b2,
        n_tilde=m.mean_n,
        n_bar=m.mean_n / (1.0 + d * m.vacuum_prob),
        effective=isinstance(spec.state, Fock) and spec.state.is_effective,
    )


def qcrb_from_f(d: int, n_bar: float, f: float) -> float:
    """Bound as a function of (d, n_bar, f) alone; increasing in f."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if n_bar <= 0.0:
        raise NonPositivePhotonNumber(f"n_bar must be positive, got {n_bar}")
    if not 0.0 < f <= (1.0 / n_bar) * (1.0 + 1e-12):
        raise FOutOfRange(f"f={f} outside (0, 1/n_bar={1.0 / n_bar}]")
    return (d * (d + 1) / 4.0) * f * (1.0 / n_bar + 1.0 / ((d + 1) / f - d * n_bar))


def noon_qcrb(d: int, n: float) -> float:
    """NOON-probe bound d(d+1)/(2 N^2).

    Non-integer ``n`` is accepted for interpolated ("effective") comparison
    curves at matched mean photon number.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if n <= 0.0:
        raise NonPositivePhotonNumber(f"photon number must be positive, got {n}")
    return d * (d + 1) / (2.0 * n * n)


def noon_bound_check(report: QcrbReport, d: int) -> bool:
    """True iff the report respects the NOON-state upper bound on the QCRB."""
    return report.qcrb <= noon_qcrb(d, report.n_bar) + _BOUND_TOL
