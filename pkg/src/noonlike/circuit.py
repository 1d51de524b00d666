"""Truncated-Fock-space simulator for the heralded state-generation circuit.

A small number of optical modes carry a sparse amplitude map over
occupation tuples with a global total-photon cutoff.  Beam splitters and
photon-number phase shifters conserve total photon number, so a cutoff
never leaks amplitude between retained sectors: amplitudes of sectors at or
below the cutoff are exact, and the discarded tail only affects the
recorded ``truncation_loss``.

Mode indexing is 0-based throughout the API; the circuit-config text format
uses 1-based labels (the conventional numbering of the three-mode setup)
and the parser converts.

Beam splitter conventions (transmitted amplitude sqrt(T) on both ports):

* ``symmetric`` - reflection picks up a phase i from either side.
* ``real``      - reflection amplitudes -sqrt(1-T) from the first port and
  +sqrt(1-T) from the second.

The shipped reference topology splits the squeezed-vacuum input first and
heralds on one photon in the trigger mode, which guarantees a vacuum-free
output: the trigger can only fire by consuming one photon of a squeezed
pair, never a lone coherent photon.  Combining the remaining half of the
pair with the coherent beam then cancels every mixed term up to four
photons precisely when the pump condition alpha^2 = 3 tanh(r) / 2 holds.
The resulting two-mode state is the antisymmetric superposition
(|phi>|0> - |0>|phi>)/sqrt(2); the relative branch phase is reported and
fitted by the verifier, since no passive relabeling can turn it into the
symmetric one.

Element application is a pure transformation producing a new state; sweeps
can run data-parallel without shared mutable state.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyPostSelection,
    ModeOutOfRange,
    NoonlikeError,
    OrderingViolation,
    TruncationInsufficient,
)
from .families import Family, FamilyTarget, SweepCurve, solve_param_for_nbar
from .qcrb import Balanced, ProbeSpec, noon_qcrb, qcrb_closed_form
from .states import (
    Fock,
    FockSuperposition,
    FockVector,
    SingleModeState,
    fock_amplitudes,
    moments_from_amplitudes,
)

__all__ = [
    "MultiModeFockState",
    "BeamSplitter",
    "PhaseShifter",
    "CircuitElement",
    "CircuitConfig",
    "HeraldedState",
    "ExperimentResult",
    "inject",
    "apply_element",
    "post_select",
    "run_experiment",
    "verify_noonlike_form",
    "experiment_qcrb_comparison",
    "parse_circuit_config",
    "load_circuit_config",
    "default_circuit_config",
    "pump_amplitude",
    "heralded_target_amplitudes",
    "heralded_success_probability",
]

_MASS_TOL = 1e-9


@dataclass(frozen=True)
class MultiModeFockState:
    """Sparse amplitude map over occupation tuples with a total-photon cutoff."""

    mode_count: int
    cutoff: int
    amps: dict[tuple[int, ...], complex]
    truncation_loss: float = 0.0

    def __post_init__(self):
        for occ in self.amps:
            if len(occ) != self.mode_count:
                raise ValueError(f"occupation {occ} has wrong arity")
            if any(n < 0 for n in occ) or sum(occ) > self.cutoff:
                raise ValueError(f"occupation {occ} violates the cutoff {self.cutoff}")
        mass = self.norm_squared + self.truncation_loss
        if not 1.0 - _MASS_TOL <= mass <= 1.0 + _MASS_TOL:
            raise ValueError(f"mass {mass} not within tolerance of 1")

    @property
    def norm_squared(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.amps.values()))

    def amplitude(self, occ: tuple[int, ...]) -> complex:
        return self.amps.get(occ, 0.0 + 0.0j)


@dataclass(frozen=True)
class BeamSplitter:
    mode_a: int
    mode_b: int
    transmissivity: float = 0.5
    convention: str = "symmetric"

    def __post_init__(self):
        if self.mode_a == self.mode_b:
            raise ValueError("beam splitter needs two distinct modes")
        if not 0.0 < self.transmissivity < 1.0:
            raise ValueError(f"transmissivity must be in (0, 1), got {self.transmissivity}")
        if self.convention not in ("symmetric", "real"):
            raise ValueError(f"unknown convention {self.convention!r}")

    def reflection_amplitudes(self) -> tuple[complex, complex]:
        """(from mode_a, from mode_b) reflection amplitudes."""
        rho = math.sqrt(1.0 - self.transmissivity)
        if self.convention == "symmetric":
            return 1j * rho, 1j * rho
        return -rho, rho


@dataclass(frozen=True)
class PhaseShifter:
    mode: int
    const_phase: float = 0.0
    per_photon_phase: float = 0.0


CircuitElement = BeamSplitter | PhaseShifter


@dataclass(frozen=True)
class HeraldedState:
    state: MultiModeFockState
    success_prob: float
    herald_rule: str


@dataclass(frozen=True)
class ExperimentResult:
    """Decomposition of the heralded two-mode state.

    ``phi_amps`` holds the single-branch amplitudes c_0..c_4; the two-mode
    state is (|phi>|0> + e^{i branch_phase} |0>|phi>)/sqrt(2) up to the
    reported fidelity.
    """

    phi_amps: tuple[complex, ...]
    fidelity_to_noonlike: float
    n_bar: float
    success_prob: float
    branch_phase: float
    truncation_loss: float


@dataclass(frozen=True)
class CircuitConfig:
    mode_count: int
    coherent_mode: int
    squeezed_mode: int
    elements: tuple[CircuitElement, ...]
    herald_mode: int
    herald_count: int
    output_modes: tuple[int, ...]
    max_output_photons: int
    cutoff: int

    def __post_init__(self):
        modes = range(self.mode_count)
        used = (self.coherent_mode, self.squeezed_mode, self.herald_mode, *self.output_modes)
        if any(m not in modes for m in used):
            raise ModeOutOfRange(f"config references modes outside 0..{self.mode_count - 1}")
        if self.coherent_mode == self.squeezed_mode:
            raise ValueError("coherent and squeezed inputs must enter distinct modes")
        if set(self.output_modes) | {self.herald_mode} != set(modes) or len(
            set(self.output_modes)
        ) != len(self.output_modes) or self.herald_mode in self.output_modes:
            raise ValueError("herald mode plus output modes must partition the modes")
        if self.cutoff < self.herald_count + self.max_output_photons:
            raise ValueError("cutoff below herald_count + max_output_photons")


def _sqrt_fact_ratio(p: int, q: int, m: int, n: int) -> float:
    # sqrt(p! q! / (m! n!)) via log-gamma, safe for large occupations
    return math.exp(
        0.5
        * (
            math.lgamma(p + 1.0)
            + math.lgamma(q + 1.0)
            - math.lgamma(m + 1.0)
            - math.lgamma(n + 1.0)
        )
    )


def inject(
    per_mode_states: Sequence[SingleModeState],
    cutoff: int,
    loss_tol: float = 1e-6,
) -> MultiModeFockState:
    """Tensor product of per-mode truncated expansions.

    Keeps every occupation tuple whose total is at most ``cutoff`` and
    records the discarded probability as ``truncation_loss``.  Raises
    TruncationInsufficient when the loss exceeds ``loss_tol``; callers that
    only consume low-photon sectors (heralded runs) may pass ``math.inf``
    because number-conserving elements never mix sectors.
    """
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    vectors = [
        fock_amplitudes(s, n_max=cutoff, tail_tol=math.inf).amps for s in per_mode_states
    ]
    amps: dict[tuple[int, ...], complex] = {}

    def extend(prefix: tuple[int, ...], amp: complex, budget: int, mode: int):
        if mode == len(vectors):
            amps[prefix] = amp
            return
        vec = vectors[mode]
        for n in range(0, min(budget, len(vec) - 1) + 1):
            a = vec[n]
            if a == 0:
                continue
            extend(prefix + (n,), amp * a, budget - n, mode + 1)

    extend((), 1.0 + 0.0j, cutoff, 0)
    kept = float(sum(abs(a) ** 2 for a in amps.values()))
    loss = max(0.0, 1.0 - kept)
    if loss > loss_tol:
        raise TruncationInsufficient(
            f"truncation loss {loss:.3e} exceeds {loss_tol:.3e} at cutoff {cutoff}"
        )
    return MultiModeFockState(len(vectors), cutoff, amps, loss)


def _apply_beam_splitter(state: MultiModeFockState, e: BeamSplitter) -> MultiModeFockState:
    a_idx, b_idx = e.mode_a, e.mode_b
    tau = math.sqrt(e.transmissivity)
    rho_a, rho_b = e.reflection_amplitudes()
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in state.amps.items():
        m, n = occ[a_idx], occ[b_idx]
        if m == 0 and n == 0:
            out[occ] = out.get(occ, 0.0) + amp
            continue
        total = m + n
        # (tau a + rho_a b)^m (rho_b a + tau b)^n expanded binomially
        coeffs = np.zeros(total + 1, dtype=np.complex128)
        for j in range(m + 1):
            left = math.comb(m, j) * tau**j * rho_a ** (m - j)
            for k in range(n + 1):
                coeffs[j + k] += left * math.comb(n, k) * rho_b**k * tau ** (n - k)
        base = list(occ)
        for p in range(total + 1):
            w = coeffs[p]
            if w == 0:
                continue
            base[a_idx], base[b_idx] = p, total - p
            key = tuple(base)
            out[key] = out.get(key, 0.0) + amp * w * _sqrt_fact_ratio(
                p, total - p, m, n
            )
    out = {occ: a for occ, a in out.items() if a != 0}
    return MultiModeFockState(state.mode_count, state.cutoff, out, state.truncation_loss)


def _apply_phase_shifter(state: MultiModeFockState, e: PhaseShifter) -> MultiModeFockState:
    out = {}
    for occ, amp in state.amps.items():
        phase = e.const_phase + occ[e.mode] * e.per_photon_phase
        out[occ] = amp * complex(math.cos(phase), math.sin(phase))
    return MultiModeFockState(state.mode_count, state.cutoff, out, state.truncation_loss)


def apply_element(state: MultiModeFockState, e: CircuitElement) -> MultiModeFockState:
    """Apply one circuit element, returning a new state."""
    modes = (
        (e.mode_a, e.mode_b) if isinstance(e, BeamSplitter) else (e.mode,)
    )
    if any(not 0 <= m < state.mode_count for m in modes):
        raise ModeOutOfRange(f"element modes {modes} outside 0..{state.mode_count - 1}")
    if isinstance(e, BeamSplitter):
        return _apply_beam_splitter(state, e)
    return _apply_phase_shifter(state, e)


def post_select(
    state: MultiModeFockState,
    herald_mode: int,
    herald_count: int,
    output_modes: Sequence[int],
    max_output_photons: int,
) -> HeraldedState:
    """Condition on an exact herald count and an output photon budget.

    Keeps amplitudes with exactly ``herald_count`` photons in the herald
    mode and at most ``max_output_photons`` in the output modes combined,
    renormalizes over the kept mass, and reports that mass as the success
    probability (the injected state is never renormalized after truncation,
    so this is an absolute probability).
    """
    if herald_count < 0:
        raise ValueError("herald_count must be >= 0")
    all_modes = set(range(state.mode_count))
    if set(output_modes) | {herald_mode} != all_modes or herald_mode in output_modes:
        raise ValueError("herald mode plus output modes must partition the modes")
    kept: dict[tuple[int, ...], complex] = {}
    mass = 0.0
    for occ, amp in state.amps.items():
        if occ[herald_mode] != herald_count:
            continue
        if sum(occ[m] for m in output_modes) > max_output_photons:
            continue
        kept[tuple(occ[m] for m in output_modes)] = amp
        mass += abs(amp) ** 2
    if mass < 1e-15:
        raise EmptyPostSelection(
            f"herald {herald_count} photon(s) in mode {herald_mode} kept no mass"
        )
    scale = 1.0 / math.sqrt(mass)
    out = MultiModeFockState(
        len(output_modes),
        max_output_photons,
        {occ: amp * scale for occ, amp in kept.items()},
        0.0,
    )
    rule = (
        f"exactly {herald_count} photon(s) in mode {herald_mode}, "
        f"at most {max_output_photons} photons in modes {tuple(output_modes)}"
    )
    return HeraldedState(out, mass, rule)


def _noonlike_decomposition(
    two_mode: MultiModeFockState,
) -> tuple[np.ndarray, float, float]:
    """Extract (phi, fidelity, branch_phase) from a two-mode state.

    phi is read off the (n, 0) amplitudes (scaled by sqrt(2)); the branch
    phase beta is fitted so that
    (|phi>|0> + e^{i beta}|0>|phi>)/sqrt(2) best matches the state, and the
    fidelity is the squared overlap with that reconstruction.
    """
    if two_mode.mode_count != 2:
        raise ValueError("decomposition requires a two-mode state")
    n_top = two_mode.cutoff
    phi = np.zeros(n_top + 1, dtype=np.complex128)
    branch2 = np.zeros(n_top + 1, dtype=np.complex128)
    phi[0] = math.sqrt(2.0) * two_mode.amplitude((0, 0))
    for n in range(1, n_top + 1):
        phi[n] = math.sqrt(2.0) * two_mode.amplitude((n, 0))
        branch2[n] = math.sqrt(2.0) * two_mode.amplitude((0, n))
    overlap = complex(np.sum(np.conj(phi[1:]) * branch2[1:]))
    beta = math.atan2(overlap.imag, overlap.real) if abs(overlap) > 1e-300 else 0.0

    recon: dict[tuple[int, int], complex] = {}
    phase = complex(math.cos(beta), math.sin(beta))
    for n in range(1, n_top + 1):
        if phi[n] != 0:
            recon[(n, 0)] = phi[n] / math.sqrt(2.0)
            recon[(0, n)] = phase * phi[n] / math.sqrt(2.0)
    vac = two_mode.amplitude((0, 0))
    if vac != 0:
        recon[(0, 0)] = vac

    dot = sum(np.conj(recon[k]) * two_mode.amplitude(k) for k in recon)
    norm_r = sum(abs(a) ** 2 for a in recon.values())
    norm_s = two_mode.norm_squared
    fidelity = abs(dot) ** 2 / (norm_r * norm_s) if norm_r > 0 else 0.0
    return phi, float(fidelity), beta


def verify_noonlike_form(two_mode: MultiModeFockState) -> tuple[np.ndarray, float]:
    """Candidate branch amplitudes and fidelity to the two-branch form.

    Low fidelity is a returned value, never an error.
    """
    phi, fidelity, _ = _noonlike_decomposition(two_mode)
    return phi, fidelity


def pump_amplitude(r: float) -> float:
    """Coherent amplitude matched to the squeeze factor: alpha^2 = 3 tanh(r)/2."""
    if r <= 0.0:
        raise ValueError(f"squeeze factor must be positive, got {r}")
    return math.sqrt(1.5 * math.tanh(r))


def heralded_target_amplitudes(r: float) -> np.ndarray:
    """Reference amplitudes c_0..c_4 of the heralded branch state.

    c_n = i^n |c_n| with magnitudes (2 sqrt(2), 2 sqrt(3 t), 2 sqrt(3) t,
    3 t^{3/2}) / g and g^2 = 8 + 12 t + 12 t^2 + 9 t^3, t = tanh(r).
    """
    t = math.tanh(r)
    g = math.sqrt(8.0 + 12.0 * t + 12.0 * t * t + 9.0 * t**3)
    mags = np.array(
        [0.0, 2.0 * math.sqrt(2.0), 2.0 * math.sqrt(3.0 * t), 2.0 * math.sqrt(3.0) * t, 3.0 * t**1.5]
    )
    return mags / g * np.array([1j**n for n in range(5)])


def heralded_success_probability(r: float) -> float:
    """Closed-form herald-and-keep probability for the reference topology.

    Derived from the generating-function form of the circuit output:
    P = t^2 g(r)^2 exp(-3t/2) / (32 cosh r), t = tanh(r).
    """
    t = math.tanh(r)
    g2 = 8.0 + 12.0 * t + 12.0 * t * t + 9.0 * t**3
    return t * t * g2 * math.exp(-1.5 * t) / (32.0 * math.cosh(r))


def run_experiment(
    r: float,
    config: CircuitConfig | None = None,
    cutoff: int | None = None,
) -> ExperimentResult:
    """Simulate the heralded source at squeeze factor ``r``.

    The coherent amplitude is set by the pump condition.  The inject step
    accepts any truncation loss: every element conserves total photon
    number, so the amplitudes of the kept (<= herald + output budget)
    sectors and the success probability are exact whenever the cutoff is at
    least that budget; larger squeezed-state tails above the cutoff cannot
    feed back into them.
    """
    cfg = config if config is not None else default_circuit_config()
    cut = cfg.cutoff if cutoff is None else cutoff
    if cut < cfg.herald_count + cfg.max_output_photons:
        raise ValueError("cutoff below the heralded photon budget")
    from .states import Coherent, SqueezedVacuum  # local to avoid name clashes

    per_mode: list[SingleModeState] = [Fock(0)] * cfg.mode_count
    per_mode[cfg.coherent_mode] = Coherent(pump_amplitude(r))
    per_mode[cfg.squeezed_mode] = SqueezedVacuum(r)
    state = inject(per_mode, cut, loss_tol=math.inf)
    loss = state.truncation_loss
    for element in cfg.elements:
        state = apply_element(state, element)
    heralded = post_select(
        state, cfg.herald_mode, cfg.herald_count, cfg.output_modes, cfg.max_output_photons
    )
    phi, fidelity, beta = _noonlike_decomposition(heralded.state)

    norm = float(np.sum(np.abs(phi) ** 2))
    if abs(norm - 1.0) > 1e-10:
        raise NoonlikeError(f"branch amplitudes not normalized: {norm}")
    if abs(phi[0]) > 1e-10:
        raise NoonlikeError(f"unexpected vacuum component |c_0| = {abs(phi[0]):.3e}")
    vec = FockVector(phi / math.sqrt(norm), len(phi) - 1, 0.0)
    n_bar = moments_from_amplitudes(vec).mean_n
    return ExperimentResult(
        phi_amps=tuple(phi),
        fidelity_to_noonlike=fidelity,
        n_bar=n_bar,
        success_prob=heralded.success_prob,
        branch_phase=beta,
        truncation_loss=loss,
    )


def experiment_qcrb_comparison(
    r_grid: Sequence[float],
    config: CircuitConfig | None = None,
    cutoff: int | None = None,
) -> tuple[SweepCurve, SweepCurve, SweepCurve]:
    """Bound of the heralded state vs effective-NOON and ECS at matched n_bar.

    Returns (noon_curve, ecs_curve, phi_curve); enforces the strict ordering
    ECS < heralded state < NOON at every grid point.
    """
    noon_pts, ecs_pts, phi_pts = [], [], []
    for r in r_grid:
        result = run_experiment(r, config=config, cutoff=cutoff)
        amps = np.asarray(result.phi_amps)
        amps = amps / math.sqrt(float(np.sum(np.abs(amps) ** 2)))
        phi_state = FockSuperposition(tuple(amps))
        q_phi = qcrb_closed_form(ProbeSpec(1, phi_state, Balanced())).qcrb
        n_bar = result.n_bar
        q_noon = noon_qcrb(1, n_bar)
        ecs_state = solve_param_for_nbar(FamilyTarget(Family.ECS, 1, n_bar))
        q_ecs = qcrb_closed_form(ProbeSpec(1, ecs_state, Balanced())).qcrb
        if not q_ecs < q_phi < q_noon:
            raise OrderingViolation(
                f"expected ECS < heralded < NOON at r={r}: {q_ecs}, {q_phi}, {q_noon}"
            )
        noon_pts.append((n_bar, q_noon, r))
        ecs_pts.append((n_bar, q_ecs, r))
        phi_pts.append((n_bar, q_phi, r))
    return (
        SweepCurve(tuple(noon_pts), label="noon_effective"),
        SweepCurve(tuple(ecs_pts), label="ecs"),
        SweepCurve(tuple(phi_pts), label="heralded"),
    )


# --------------------------- config file handling ---------------------------

_PHASE_RE = re.compile(r"^(?P<sign>[+-]?)(?P<coef>\d+(?:\.\d+)?)?pi(?:/(?P<div>\d+))?$")


def _parse_phase(token: str) -> float:
    token = token.strip().lower()
    m = _PHASE_RE.match(token)
    if m:
        value = math.pi * float(m.group("coef") or 1.0)
        if m.group("div"):
            value /= float(m.group("div"))
        return -value if m.group("sign") == "-" else value
    return float(token)


def _format_phase(value: float) -> str:
    for label, ref in (("pi", math.pi), ("pi/2", math.pi / 2), ("pi/4", math.pi / 4)):
        if abs(value - ref) < 1e-15:
            return label
        if abs(value + ref) < 1e-15:
            return "-" + label
    if value == 0.0:
        return "0"
    return repr(value)


def _kv(parts: Iterable[str]) -> dict[str, str]:
    out = {}
    for part in parts:
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        key, val = part.split("=", 1)
        out[key] = val
    return out


def parse_circuit_config(text: str) -> CircuitConfig:
    """Parse the structured key-value circuit description.

    Lines (1-based mode labels; '#' starts a comment):

        modes N
        coherent-input M
        squeezed-input M
        cutoff N
        element beamsplitter modes=A,B transmissivity=T convention=symmetric|real
        element phaseshifter mode=M const=PHI per-photon=PHI
        herald mode=M count=N
        outputs A,B,...
        max-output-photons N

    Phases accept radians or 'pi' fractions like -pi/2.
    """
    fields: dict[str, object] = {}
    elements: list[CircuitElement] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "modes":
            fields["mode_count"] = int(rest[0])
        elif head == "coherent-input":
            fields["coherent_mode"] = int(rest[0]) - 1
        elif head == "squeezed-input":
            fields["squeezed_mode"] = int(rest[0]) - 1
        elif head == "cutoff":
            fields["cutoff"] = int(rest[0])
        elif head == "max-output-photons":
            fields["max_output_photons"] = int(rest[0])
        elif head == "outputs":
            fields["output_modes"] = tuple(int(tok) - 1 for tok in rest[0].split(","))
        elif head == "herald":
            kv = _kv(rest)
            fields["herald_mode"] = int(kv["mode"]) - 1
            fields["herald_count"] = int(kv["count"])
        elif head == "element":
            kind, *params = rest
            kv = _kv(params)
            if kind == "beamsplitter":
                a, b = (int(tok) - 1 for tok in kv["modes"].split(","))
                elements.append(
                    BeamSplitter(
                        a,
                        b,
                        transmissivity=float(kv.get("transmissivity", 0.5)),
                        convention=kv.get("convention", "symmetric"),
                    )
                )
            elif kind == "phaseshifter":
                elements.append(
                    PhaseShifter(
                        int(kv["mode"]) - 1,
                        const_phase=_parse_phase(kv.get("const", "0")),
                        per_photon_phase=_parse_phase(kv.get("per-photon", "0")),
                    )
                )
            else:
                raise ValueError(f"unknown element kind {kind!r}")
        else:
            raise ValueError(f"unknown config line {raw!r}")
    missing = {
        "mode_count",
        "coherent_mode",
        "squeezed_mode",
        "cutoff",
        "herald_mode",
        "herald_count",
        "output_modes",
        "max_output_photons",
    } - set(fields)
    if missing:
        raise ValueError(f"config missing fields: {sorted(missing)}")
    return CircuitConfig(elements=tuple(elements), **fields)  # type: ignore[arg-type]


def write_circuit_config(cfg: CircuitConfig) -> str:
    """Serialize a config back to the text format (1-based labels)."""
    lines = [
        f"modes {cfg.mode_count}",
        f"coherent-input {cfg.coherent_mode + 1}",
        f"squeezed-input {cfg.squeezed_mode + 1}",
        f"cutoff {cfg.cutoff}",
    ]
    for e in cfg.elements:
        if isinstance(e, BeamSplitter):
            lines.append(
                f"element beamsplitter modes={e.mode_a + 1},{e.mode_b + 1} "
                f"transmissivity={e.transmissivity!r} convention={e.convention}"
            )
        else:
            lines.append(
                f"element phaseshifter mode={e.mode + 1} "
                f"const={_format_phase(e.const_phase)} "
                f"per-photon={_format_phase(e.per_photon_phase)}"
            )
    lines.append(f"herald mode={cfg.herald_mode + 1} count={cfg.herald_count}")
    lines.append("outputs " + ",".join(str(m + 1) for m in cfg.output_modes))
    lines.append(f"max-output-photons {cfg.max_output_photons}")
    return "\n".join(lines) + "\n"


def load_circuit_config(path: str | Path) -> CircuitConfig:
    return parse_circuit_config(Path(path).read_text())


def default_circuit_config() -> CircuitConfig:
    """The shipped reference topology (see the module docstring)."""
    text = resources.files("noonlike").joinpath("data/reference_circuit.cfg").read_text()
    return parse_circuit_config(text)
