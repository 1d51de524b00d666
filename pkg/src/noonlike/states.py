"""Single-mode constituent states and their photon-number statistics.

Each state is described both analytically (closed-form moments of the photon
number operator) and numerically (truncated Fock expansions), so the two
routes can check each other.

Conventions
-----------
* All displacement amplitudes and squeeze factors are real; complex inputs
  are rejected at construction.
* ``SqueezedVacuum(r)`` is the state whose even Fock amplitudes follow
  ``c_{2m} = (cosh r)^{-1/2} (-tanh r)^m sqrt((2m)!)/(2^m m!)``.
* ``SqueezedCoherent(alpha, r)`` is displacement applied after squeezing,
  with the squeeze axis oriented so that the displacement sits on the
  anti-squeezed quadrature.  This fixes the vacuum overlap to
  ``exp(-alpha^2 (1 - tanh r)) / cosh r`` and the photon-number variance to
  ``alpha^2 e^{2r} + 2 sinh^2 r cosh^2 r``.  Relative to ``SqueezedVacuum``
  the internal squeeze generator carries the opposite sign, which only
  matters for the sign pattern of the amplitudes, not for any moment.

All values are immutable after construction and all functions are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationInsufficient, ZeroPhotonState

__all__ = [
    "Fock",
    "Coherent",
    "SqueezedVacuum",
    "SqueezedCoherent",
    "FockSuperposition",
    "SingleModeState",
    "Moments",
    "FockVector",
    "moments",
    "fock_amplitudes",
    "moments_from_amplitudes",
    "f_factor",
]

_NORM_TOL = 1e-12


def _require_real(name: str, value) -> float:
    if isinstance(value, complex):
        raise TypeError(f"{name} must be a real number, got complex {value!r}")
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"{name} must be finite, got {out}")
    return out


@dataclass(frozen=True)
class Fock:
    """Number state |n>.

    ``n`` is an integer for a physical state; non-integer values are accepted
    as "effective" interpolation points for comparison curves (they support
    moments but have no Fock expansion).
    """

    n: float

    def __post_init__(self):
        n = _require_real("n", self.n)
        if n < 0:
            raise ValueError(f"photon count must be nonnegative, got {n}")
        object.__setattr__(self, "n", n)

    @property
    def is_effective(self) -> bool:
        return not float(self.n).is_integer()


@dataclass(frozen=True)
class Coherent:
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _require_real("alpha", self.alpha))


@dataclass(frozen=True)
class SqueezedVacuum:
    r: float

    def __post_init__(self):
        object.__setattr__(self, "r", _require_real("r", self.r))


@dataclass(frozen=True)
class SqueezedCoherent:
    alpha: float
    r: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _require_real("alpha", self.alpha))
        object.__setattr__(self, "r", _require_real("r", self.r))


@dataclass(frozen=True)
class FockSuperposition:
    """Explicit finite superposition sum_n amps[n] |n>, normalized to 1."""

    amps: tuple[complex, ...]

    def __post_init__(self):
        amps = tuple(complex(a) for a in self.amps)
        if not amps:
            raise ValueError("amplitude list must be non-empty")
        norm_sq = sum(abs(a) ** 2 for a in amps)
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"amplitudes not normalized: sum |c_n|^2 = {norm_sq!r}")
        object.__setattr__(self, "amps", amps)


SingleModeState = Fock | Coherent | SqueezedVacuum | SqueezedCoherent | FockSuperposition


@dataclass(frozen=True)
class Moments:
    """First two photon-number moments plus the vacuum overlap probability."""

    mean_n: float
    mean_n2: float
    vacuum_prob: float

    def __post_init__(self):
        if self.mean_n < 0:
            raise ValueError(f"mean_n must be nonnegative, got {self.mean_n}")
        if self.mean_n2 < self.mean_n**2 - 1e-9 * max(1.0, self.mean_n2):
            raise ValueError("mean_n2 < mean_n^2 violates variance nonnegativity")
        if not -1e-12 <= self.vacuum_prob <= 1 + 1e-12:
            raise ValueError(f"vacuum_prob outside [0, 1]: {self.vacuum_prob}")

    @property
    def variance(self) -> float:
        return self.mean_n2 - self.mean_n**2


@dataclass(frozen=True)
class FockVector:
    """Truncated Fock expansion |0>..|n_max> with the discarded tail mass."""

    amps: np.ndarray
    n_max: int
    tail_mass: float

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.ndim != 1 or len(amps) != self.n_max + 1:
            raise ValueError("amps must be a 1-D array of length n_max + 1")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if not (1.0 - self.tail_mass - 1e-9) <= norm_sq <= 1.0 + 1e-9:
            raise ValueError(
                f"norm {norm_sq} inconsistent with tail_mass {self.tail_mass}"
            )
        object.__setattr__(self, "amps", amps)
        amps.setflags(write=False)


def moments(state: SingleModeState) -> Moments:
    """Analytic photon-number moments of a constituent state."""
    if isinstance(state, Fock):
        n = state.n
        return Moments(n, n * n, 1.0 if n == 0 else 0.0)
    if isinstance(state, Coherent):
        a2 = state.alpha**2
        return Moments(a2, a2 + a2 * a2, math.exp(-a2))
    if isinstance(state, SqueezedVacuum):
        sh2 = math.sinh(state.r) ** 2
        return Moments(sh2, 3 * sh2 * sh2 + 2 * sh2, 1.0 / math.cosh(state.r))
    if isinstance(state, SqueezedCoherent):
        a2 = state.alpha**2
        r = state.r
        sh2 = math.sinh(r) ** 2
        ch2 = math.cosh(r) ** 2
        n_tilde = a2 + sh2
        var = a2 * math.exp(2 * r) + 2 * sh2 * ch2
        vac = math.exp(-a2 * (1.0 - math.tanh(r))) / math.cosh(r)
        return Moments(n_tilde, n_tilde**2 + var, vac)
    if isinstance(state, FockSuperposition):
        mean = sum(n * abs(c) ** 2 for n, c in enumerate(state.amps))
        mean2 = sum(n * n * abs(c) ** 2 for n, c in enumerate(state.amps))
        return Moments(mean, mean2, abs(state.amps[0]) ** 2)
    raise TypeError(f"not a SingleModeState: {state!r}")


def _coherent_amps(alpha: float, n_max: int) -> np.ndarray:
    # log-space accumulation keeps n ~ hundreds finite past the 170! overflow
    out = np.zeros(n_max + 1, dtype=np.complex128)
    if alpha == 0.0:
        out[0] = 1.0
        return out
    a = abs(alpha)
    n = np.arange(n_max + 1, dtype=np.float64)
    log_mag = -0.5 * a * a + n * math.log(a) - 0.5 * np.array(
        [math.lgamma(k + 1.0) for k in range(n_max + 1)]
    )
    sign = np.sign(alpha) ** n
    out[:] = sign * np.exp(log_mag)
    return out


def _squeezed_vacuum_amps(r: float, n_max: int) -> np.ndarray:
    out = np.zeros(n_max + 1, dtype=np.complex128)
    if r == 0.0:
        out[0] = 1.0
        return out
    th = math.tanh(r)
    log_ch = math.log(math.cosh(r))
    for m in range(n_max // 2 + 1):
        log_mag = (
            -0.5 * log_ch
            + m * math.log(abs(th))
            + 0.5 * math.lgamma(2 * m + 1.0)
            - m * math.log(2.0)
            - math.lgamma(m + 1.0)
        )
        out[2 * m] = (-math.copysign(1.0, th)) ** m * math.exp(log_mag)
    return out


def _squeezed_coherent_amps(alpha: float, r: float, n_max: int) -> np.ndarray:
    # Stable two-term recurrence from the transformed annihilation relation
    #   (a cosh r - a^dag sinh r) |psi> = alpha e^{-r} |psi>
    # valid for the displacement-after-squeeze ordering documented above.
    out = np.zeros(n_max + 1, dtype=np.complex128)
    ch = math.cosh(r)
    sh = math.sinh(r)
    gamma = alpha * math.exp(-r)
    out[0] = math.exp(-0.5 * alpha * alpha * (1.0 - math.tanh(r))) / math.sqrt(ch)
    if n_max >= 1:
        out[1] = gamma * out[0] / ch
    for n in range(1, n_max):
        out[n + 1] = (gamma * out[n] + sh * math.sqrt(n) * out[n - 1]) / (
            ch * math.sqrt(n + 1)
        )
    return out


def _build_amps(state: SingleModeState, n_max: int) -> np.ndarray:
    if isinstance(state, Fock):
        if state.is_effective:
            raise ValueError("effective (non-integer) Fock states have no expansion")
        out = np.zeros(n_max + 1, dtype=np.complex128)
        n = int(state.n)
        if n <= n_max:
            out[n] = 1.0
        return out
    if isinstance(state, Coherent):
        return _coherent_amps(state.alpha, n_max)
    if isinstance(state, SqueezedVacuum):
        return _squeezed_vacuum_amps(state.r, n_max)
    if isinstance(state, SqueezedCoherent):
        return _squeezed_coherent_amps(state.alpha, state.r, n_max)
    if isinstance(state, FockSuperposition):
        out = np.zeros(n_max + 1, dtype=np.complex128)
        upto = min(n_max + 1, len(state.amps))
        out[:upto] = state.amps[:upto]
        return out
    raise TypeError(f"not a SingleModeState: {state!r}")


def _default_start(state: SingleModeState) -> int:
    m = moments(state)
    spread = math.sqrt(max(m.variance, 0.0) + 1.0)
    return max(20, math.ceil(m.mean_n + 10.0 * spread))


def fock_amplitudes(
    state: SingleModeState,
    n_max: int | None = None,
    tail_tol: float = 1e-12,
) -> FockVector:
    """Truncated Fock expansion of ``state``.

    With ``n_max=None`` the cutoff is chosen adaptively: start at
    ``max(20, ceil(<n> + 10 sqrt(var + 1)))`` and double until the tail mass
    drops below ``tail_tol`` (coherent/squeezed tails decay
    super-geometrically, so a few doublings always suffice).  An explicit
    ``n_max`` is honored as-is and raises TruncationInsufficient when the
    tail exceeds ``tail_tol``; pass ``tail_tol=math.inf`` to accept any tail.
    """
    if n_max is not None:
        if n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {n_max}")
        amps = _build_amps(state, n_max)
        tail = max(0.0, 1.0 - float(np.sum(np.abs(amps) ** 2)))
        if tail > tail_tol:
            raise TruncationInsufficient(
                f"tail mass {tail:.3e} exceeds tolerance {tail_tol:.3e} at n_max={n_max}"
            )
        return FockVector(amps, n_max, tail)

    cutoff = _default_start(state)
    for _ in range(8):
        amps = _build_amps(state, cutoff)
        tail = max(0.0, 1.0 - float(np.sum(np.abs(amps) ** 2)))
        if tail < tail_tol:
            return FockVector(amps, cutoff, tail)
        cutoff *= 2
    raise TruncationInsufficient(
        f"tail mass still {tail:.3e} at n_max={cutoff // 2}"
    )


def moments_from_amplitudes(v: FockVector) -> Moments:
    """Numeric moment oracle: direct sums over a truncated expansion."""
    p = np.abs(v.amps) ** 2
    total = float(np.sum(p))
    if total <= 0.0:
        raise ValueError("amplitude vector has zero norm")
    n = np.arange(v.n_max + 1, dtype=np.float64)
    mean = float(np.sum(n * p)) / total
    mean2 = float(np.sum(n * n * p)) / total
    return Moments(mean, mean2, float(p[0]) / total)


def f_factor(state: SingleModeState) -> float:
    """Sensitivity factor <n> / <n^2> of the constituent state.

    Equals 1/n for number states and is strictly smaller than 1/<n> whenever
    the photon number fluctuates.
    """
    m = moments(state)
    if m.mean_n2 <= 0.0:
        raise ZeroPhotonState("vacuum constituent: <n^2> = 0, probe carries no phase information")
    return m.mean_n / m.mean_n2
