"""Parameter matching, four-family comparisons, and weight optimization.

Families are compared at a common mean total photon number of the balanced
probe.  The NOON column uses the interpolated ("effective") photon number so
that all four curves share an x-axis; the other three families are matched
by bisection on their single free parameter, which maps monotonically to
the mean photon number.

Grid sweeps are pure and deterministic; points are produced in grid order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BracketFailure,
    ConstraintInfeasible,
    OrderingViolation,
    ZeroPhotonState,
)
from .qcrb import (
    Balanced,
    FixedB,
    ProbeSpec,
    QcrbReport,
    _b_boundary,
    _optimal_b2,
    mean_total_photons,
    qcrb_closed_form,
)
from .states import (
    Coherent,
    Fock,
    SingleModeState,
    SqueezedCoherent,
    SqueezedVacuum,
    moments,
)

__all__ = [
    "Family",
    "FamilyTarget",
    "UnbalancedSpec",
    "SweepCurve",
    "solve_param_for_nbar",
    "compare_families_at_nbar",
    "escs_sweep_r_prime",
    "escs_ratio_bracket_check",
    "unbalanced_b_boundary",
    "unbalanced_optimal_b2",
    "unbalanced_mean_photons",
    "unbalanced_spec",
    "recover_reference_weight",
    "balanced_vs_unbalanced_sweep",
    "compare_sweeps_at_common_nbar",
]

_RESIDUAL_TOL = 1e-10
_MAX_DOUBLINGS = 200


class Family(str, Enum):
    NOON = "noon"
    ECS = "ecs"
    ESCS = "escs"
    ESVS = "esvs"


@dataclass(frozen=True)
class FamilyTarget:
    family: Family
    d: int
    n_bar_target: float
    fixed_extras: float | None = None  # squeeze factor of the ESCS constituent

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.n_bar_target <= 0.0:
            raise ValueError(f"n_bar_target must be positive, got {self.n_bar_target}")
        if self.family is Family.ESCS:
            if self.fixed_extras is None or self.fixed_extras < 0.0:
                raise ValueError("ESCS targets need a nonnegative fixed squeeze factor")


@dataclass(frozen=True)
class UnbalancedSpec:
    """Weights of the unbalanced probe and its normalization-ellipse data."""

    d: int
    state: SingleModeState
    b2: float
    c2: float
    A: float
    B: float
    c_signed: float

    def constraint_residual(self) -> float:
        b = math.sqrt(self.b2)
        return self.A * self.b2 + self.B * b * self.c_signed + self.c_signed**2 - 1.0


@dataclass(frozen=True)
class SweepCurve:
    """Ordered (n_bar, qcrb, parameter) triples; n_bar never decreases."""

    points: tuple[tuple[float, float, float], ...]
    label: str

    def __post_init__(self):
        nbars = [p[0] for p in self.points]
        if any(b < a - 1e-12 for a, b in zip(nbars, nbars[1:])):
            raise ValueError(f"n_bar must be non-decreasing along curve {self.label!r}")

    @property
    def n_bars(self) -> np.ndarray:
        return np.array([p[0] for p in self.points])

    @property
    def qcrbs(self) -> np.ndarray:
        return np.array([p[1] for p in self.points])


def _builder(family: Family, r_prime: float | None) -> Callable[[float], SingleModeState]:
    if family is Family.ECS:
        return Coherent
    if family is Family.ESVS:
        return SqueezedVacuum
    if family is Family.ESCS:
        return lambda p: SqueezedCoherent(p, r_prime)
    raise ValueError(f"no bisection parameter for family {family}")


def _bisect_increasing(fn: Callable[[float], float], target: float, guess: float) -> float:
    """Root of fn(p) = target for a map verified increasing on the bracket."""
    lo, f_lo = 0.0, fn(0.0) - target
    if f_lo > _RESIDUAL_TOL:
        raise BracketFailure(
            f"target {target} below the family floor {f_lo + target:.6g} at parameter 0"
        )
    hi = max(guess, 1e-6)
    f_hi = fn(hi) - target
    doublings = 0
    while f_hi < 0.0:
        doublings += 1
        if doublings > _MAX_DOUBLINGS:
            raise BracketFailure(f"no bracket after {_MAX_DOUBLINGS} doublings")
        hi *= 2.0
        f_hi = fn(hi) - target

    samples = [fn(lo + (hi - lo) * k / 4.0) for k in range(5)]
    if any(b < a - 1e-9 * max(1.0, abs(a)) for a, b in zip(samples, samples[1:])):
        raise BracketFailure("map is not increasing on the bracket")

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid) - target
        if abs(f_mid) <= _RESIDUAL_TOL and (hi - lo) <= 1e-12 * max(1.0, mid):
            return mid
        if f_mid < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_param_for_nbar(target: FamilyTarget) -> SingleModeState:
    """State of the requested family whose balanced probe has the target n_bar.

    NOON targets return an effective number state directly (its mean photon
    number equals the occupation).  The other families bisect their free
    parameter; the map to n_bar is strictly increasing, so a target below
    the value at parameter 0 (possible for ESCS with a fixed squeeze factor)
    raises BracketFailure.
    """
    if target.family is Family.NOON:
        return Fock(target.n_bar_target)
    build = _builder(target.family, target.fixed_extras)
    d = target.d

    def nbar_of(p: float) -> float:
        return mean_total_photons(d, build(p))

    guess = math.sqrt(target.n_bar_target)
    if target.family is Family.ESVS:
        guess = math.asinh(math.sqrt(target.n_bar_target))
    param = _bisect_increasing(nbar_of, target.n_bar_target, guess)
    state = build(param)
    residual = abs(mean_total_photons(d, state) - target.n_bar_target)
    if residual > _RESIDUAL_TOL * max(1.0, target.n_bar_target):
        raise BracketFailure(f"bisection residual {residual:.3e} too large")
    return state


def _param_of(state: SingleModeState) -> float:
    if isinstance(state, Fock):
        return state.n
    if isinstance(state, Coherent):
        return state.alpha
    if isinstance(state, SqueezedVacuum):
        return state.r
    if isinstance(state, SqueezedCoherent):
        return state.alpha
    raise TypeError(f"no scalar parameter for {state!r}")


def _labelled_report(family: Family, d: int, state: SingleModeState) -> QcrbReport:
    rep = qcrb_closed_form(ProbeSpec(d, state, Balanced()))
    return QcrbReport(
        qcrb=rep.qcrb,
        f=rep.f,
        R=rep.R,
        b2=rep.b2,
        n_tilde=rep.n_tilde,
        n_bar=rep.n_bar,
        family=family.value,
        parameter=_param_of(state),
        effective=rep.effective,
    )


def compare_families_at_nbar(
    d: int, n_bar: float, escs_r_prime: float = 1.0
) -> list[QcrbReport]:
    """Reports for NOON, ECS, ESCS, ESVS matched to the same n_bar.

    Also enforces the proven strict orderings: the bounds decrease, the
    constituent mean photon numbers increase, and the sensitivity factors
    decrease along NOON -> ECS -> ESCS -> ESVS.  A violation indicates an
    implementation bug and raises OrderingViolation.
    """
    reports = [
        _labelled_report(
            fam,
            d,
            solve_param_for_nbar(
                FamilyTarget(
                    fam,
                    d,
                    n_bar,
                    escs_r_prime if fam is Family.ESCS else None,
                )
            ),
        )
        for fam in (Family.NOON, Family.ECS, Family.ESCS, Family.ESVS)
    ]
    qcrbs = [r.qcrb for r in reports]
    n_tildes = [r.n_tilde for r in reports]
    fs = [r.f for r in reports]
    if not all(a > b for a, b in zip(qcrbs, qcrbs[1:])):
        raise OrderingViolation(f"bound ordering failed at d={d}, n_bar={n_bar}: {qcrbs}")
    if not all(a < b for a, b in zip(n_tildes, n_tildes[1:])):
        raise OrderingViolation(
            f"constituent photon ordering failed at d={d}, n_bar={n_bar}: {n_tildes}"
        )
    if not all(a > b for a, b in zip(fs, fs[1:])):
        raise OrderingViolation(f"f ordering failed at d={d}, n_bar={n_bar}: {fs}")
    return reports


def escs_sweep_r_prime(
    d: int, n_bar: float, r_prime_grid: Sequence[float]
) -> SweepCurve:
    """ESCS bound at fixed n_bar for each squeeze factor in the grid.

    The bound decreases strictly with the squeeze factor; at 0 it equals
    the ECS value and it approaches the ESVS value as the squeeze factor
    approaches the matched-ESVS one (where the displacement shrinks to 0).
    """
    if any(rp < 0.0 for rp in r_prime_grid):
        raise ValueError("squeeze factors must be nonnegative")
    points = []
    for rp in r_prime_grid:
        state = solve_param_for_nbar(FamilyTarget(Family.ESCS, d, n_bar, rp))
        rep = qcrb_closed_form(ProbeSpec(d, state, Balanced()))
        points.append((n_bar, rep.qcrb, rp))
    values = [q for _, q, _ in points]
    if not all(a > b for a, b in zip(values, values[1:])):
        raise OrderingViolation(f"bound not decreasing with squeeze factor: {values}")
    return SweepCurve(tuple(points), label=f"escs_sweep_d{d}_nbar{n_bar:g}")


def escs_ratio_bracket_check(alpha_p: float, r_p: float, r_matched: float) -> bool:
    """Check the second-moment ratio bracket behind the f-factor ordering.

    For an ESCS constituent with displacement ``alpha_p`` and squeeze
    ``r_p``, matched in mean photon number to an ESVS with squeeze
    ``r_matched``, the excess-noise ratio must lie strictly between 1 and
    ``2 cosh^2 r_matched``.
    """
    sh2 = math.sinh(r_p) ** 2
    ch2 = math.cosh(r_p) ** 2
    a2 = alpha_p**2
    ratio = (a2 * math.exp(2.0 * r_p) + 2.0 * sh2 * ch2) / (a2 + sh2)
    return 1.0 < ratio < 2.0 * math.cosh(r_matched) ** 2


def unbalanced_b_boundary(d: int, vacuum_prob: float) -> float:
    """Largest probing weight b^2 allowed by the normalization ellipse.

    At the boundary the ellipse tangency forces the reference weight to
    ``c = -B b / 2`` with ``B = 2 d vacuum_prob``.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if vacuum_prob < 0.0:
        raise ValueError(f"vacuum_prob must be nonnegative, got {vacuum_prob}")
    return _b_boundary(d, vacuum_prob)


def unbalanced_optimal_b2(d: int, state: SingleModeState) -> float:
    """Bound-minimizing b^2: R/(d + sqrt(d)) when feasible, else the boundary."""
    m = moments(state)
    if m.mean_n <= 0.0:
        raise ZeroPhotonState(f"state has mean photon number {m.mean_n}")
    return _optimal_b2(d, m.vacuum_prob, m.mean_n2 / m.mean_n**2)


def _ellipse_coeffs(d: int, vacuum_prob: float) -> tuple[float, float]:
    a_coef = d + d * (d - 1) * vacuum_prob
    b_coef = 2.0 * d * vacuum_prob
    return a_coef, b_coef


def recover_reference_weight(d: int, vacuum_prob: float, b2: float) -> float:
    """Signed reference weight c solving the normalization ellipse at given b.

    The quadratic in c has two real roots for b below the boundary; the
    algebraically larger root is returned.  That branch contains the
    balanced point (c = b) and deforms continuously into the tangency value
    ``-B b / 2`` at the boundary.
    """
    a_coef, b_coef = _ellipse_coeffs(d, vacuum_prob)
    b = math.sqrt(b2)
    disc = b_coef**2 * b2 - 4.0 * (a_coef * b2 - 1.0)
    scale = b_coef**2 * b2 + 4.0 * abs(a_coef * b2 - 1.0) + 1.0
    if disc < -1e-10 * scale:
        raise ConstraintInfeasible(f"b2={b2} exceeds the ellipse boundary")
    if disc <= 1e-12 * scale:  # tangency: the double root at the boundary
        return -0.5 * b_coef * b
    return 0.5 * (-b_coef * b + math.sqrt(disc))


def unbalanced_spec(d: int, state: SingleModeState, b2: float) -> UnbalancedSpec:
    """Full weight description of the unbalanced probe at probing weight b2."""
    m = moments(state)
    bo = _b_boundary(d, m.vacuum_prob)
    if not 0.0 < b2 <= bo * (1.0 + 1e-12):
        raise ConstraintInfeasible(f"b2={b2} outside (0, {bo}]")
    a_coef, b_coef = _ellipse_coeffs(d, m.vacuum_prob)
    c = recover_reference_weight(d, m.vacuum_prob, min(b2, bo))
    return UnbalancedSpec(
        d=d, state=state, b2=b2, c2=c * c, A=a_coef, B=b_coef, c_signed=c
    )


def unbalanced_mean_photons(d: int, state: SingleModeState, b2: float) -> float:
    """Mean total photons (c^2 + d b^2) <n> of the unbalanced probe.

    Cross terms between components vanish because the number operator
    annihilates vacuum on both sides of every overlap.
    """
    spec = unbalanced_spec(d, state, b2)
    return (spec.c2 + d * spec.b2) * moments(state).mean_n


def balanced_vs_unbalanced_sweep(
    d: int, r_grid: Sequence[float]
) -> tuple[SweepCurve, SweepCurve]:
    """Balanced and weight-optimized unbalanced curves over a squeeze grid.

    Both curves use the squeezed-vacuum family.  Each point is
    (n_bar, qcrb, r) with n_bar computed from that probe's own weights, so
    the two curves sweep n_bar at different rates over the same r grid.
    """
    if any(b <= a for a, b in zip(r_grid, list(r_grid)[1:])) or any(
        r <= 0 for r in r_grid
    ):
        raise ValueError("r_grid must be positive and strictly increasing")
    bal_points, unb_points = [], []
    for r in r_grid:
        state = SqueezedVacuum(r)
        bal = qcrb_closed_form(ProbeSpec(d, state, Balanced()))
        bal_points.append((bal.n_bar, bal.qcrb, r))

        b2_opt = unbalanced_optimal_b2(d, state)
        unb = qcrb_closed_form(ProbeSpec(d, state, FixedB(b2_opt)))
        n_bar_unb = unbalanced_mean_photons(d, state, b2_opt)
        unb_points.append((n_bar_unb, unb.qcrb, r))
    return (
        SweepCurve(tuple(bal_points), label=f"balanced_esvs_d{d}"),
        SweepCurve(tuple(unb_points), label=f"unbalanced_esvs_d{d}"),
    )


def compare_sweeps_at_common_nbar(
    balanced: SweepCurve, unbalanced: SweepCurve
) -> tuple[list[tuple[float, float, float]], float | None]:
    """Interpolated comparison of two curves at shared n_bar values.

    Returns (points, crossover) where each point is
    (n_bar, qcrb_balanced, qcrb_unbalanced) over the n_bar overlap, and
    crossover is the first n_bar at which the balanced bound exceeds the
    unbalanced one (None if the balanced curve stays at or below throughout).
    The comparison grid is the unbalanced curve's own n_bar values restricted
    to the overlap, with the balanced curve linearly interpolated in n_bar.
    """
    bal_n, bal_q = balanced.n_bars, balanced.qcrbs
    lo = max(bal_n[0], unbalanced.n_bars[0])
    hi = min(bal_n[-1], unbalanced.n_bars[-1])
    points = []
    crossover = None
    for n_bar, q_unb, _ in unbalanced.points:
        if not lo <= n_bar <= hi:
            continue
        q_bal = float(np.interp(n_bar, bal_n, bal_q))
        points.append((n_bar, q_bal, q_unb))
        if crossover is None and q_bal > q_unb * (1.0 + 1e-9):
            crossover = n_bar
    return points, crossover
