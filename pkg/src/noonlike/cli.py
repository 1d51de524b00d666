"""Command-line front end: deterministic CSV/JSON reports.

Identical invocations produce byte-identical output files: no timestamps,
fixed column orders, and every value formatted to 12 significant digits.
Exit codes: 0 success, 1 computation error, 2 usage error.

The default output directory is the current directory unless
NOONLIKE_OUTPUT_DIR is set.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .circuit import (
    default_circuit_config,
    experiment_qcrb_comparison,
    load_circuit_config,
    run_experiment,
)
from .errors import NoonlikeError, UsageError
from .families import (
    Family,
    FamilyTarget,
    balanced_vs_unbalanced_sweep,
    compare_families_at_nbar,
    compare_sweeps_at_common_nbar,
    escs_sweep_r_prime,
    solve_param_for_nbar,
)
from .qcrb import (
    Balanced,
    FixedB,
    OptimizedB,
    ProbeSpec,
    QcrbReport,
    noon_bound_check,
    noon_qcrb,
    qcrb_closed_form,
)
from .states import Coherent, Fock, SqueezedCoherent, SqueezedVacuum

__all__ = ["RunConfig", "parse_args", "emit_figure", "main"]

_FIGURE_IDS = (2, 3, 4, 6)


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: dict


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="noonlike", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common_out = dict(
        out=dict(type=Path, default=None, help="output file (default: stdout)"),
        format=dict(choices=("csv", "json"), default="csv"),
    )

    def add_out(p):
        p.add_argument("--out", **common_out["out"])
        p.add_argument("--format", **common_out["format"])

    p = sub.add_parser("qcrb", help="bound for one probe")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=float, help="photon number (noon)")
    p.add_argument("--alpha", type=float, help="displacement (ecs, escs)")
    p.add_argument("--r", type=float, help="squeeze factor (esvs)")
    p.add_argument("--r-prime", type=float, help="squeeze factor (escs)")
    p.add_argument("--b2", type=float, help="fixed probing weight b^2 (unbalanced)")
    p.add_argument("--optimized-b", action="store_true", help="optimize b^2")
    add_out(p)

    p = sub.add_parser("compare", help="four families at a common n_bar")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-bar", type=float, required=True)
    p.add_argument("--r-prime", type=float, default=1.0)
    add_out(p)

    p = sub.add_parser("sweep-escs", help="squeezed-coherent squeeze-factor sweep")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-bar", type=float, required=True)
    p.add_argument("--r-min", type=float, default=0.4)
    p.add_argument("--r-max", type=float, default=1.2)
    p.add_argument("--steps", type=int, default=3)
    add_out(p)

    p = sub.add_parser("unbalanced", help="balanced vs optimized-unbalanced sweep")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r-min", type=float, default=0.3)
    p.add_argument("--r-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=60)
    add_out(p)

    p = sub.add_parser("experiment", help="simulate the heralded source")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--circuit", type=Path, default=None, help="circuit config path")
    add_out(p)

    p = sub.add_parser("figure", help="emit a comparison dataset")
    p.add_argument("--id", type=int, required=True, choices=_FIGURE_IDS)
    p.add_argument("--d", type=int, default=5)
    p.add_argument("--n-min", type=float, default=None)
    p.add_argument("--n-max", type=float, default=None)
    p.add_argument("--r-min", type=float, default=None)
    p.add_argument("--r-max", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--r-prime", type=float, default=1.0)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--circuit", type=Path, default=None)
    add_out(p)
    return parser


def _positive(params: dict, keys: Sequence[str]) -> None:
    for key in keys:
        value = params.get(key)
        if value is not None and value <= 0:
            raise UsageError(f"--{key.replace('_', '-')} must be positive, got {value}")


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Validated run configuration; raises UsageError on bad input."""
    ns = _build_parser().parse_args(list(argv))
    params = {k: v for k, v in vars(ns).items() if k != "command"}
    _positive(params, ["n", "n_bar", "r", "r_prime", "b2", "n_min", "n_max", "steps", "cutoff"])
    if params.get("d") is not None and params["d"] < 1:
        raise UsageError(f"--d must be >= 1, got {params['d']}")
    if ns.command == "qcrb":
        needed = {"noon": "n", "ecs": "alpha", "escs": "alpha", "esvs": "r"}[ns.family]
        if params.get(needed) is None:
            raise UsageError(f"--family {ns.family} requires --{needed}")
        if ns.family == "escs" and params.get("r_prime") is None:
            raise UsageError("--family escs requires --r-prime")
    return RunConfig(ns.command, params)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _round12(value: float) -> float:
    return float(f"{value:.12g}")


def _write(columns: list[str], rows: list[list], out: Path | None, fmt: str) -> None:
    if fmt == "csv":
        text_rows = [",".join(columns)] + [",".join(_fmt(v) for v in row) for row in rows]
        payload = "\n".join(text_rows) + "\n"
    else:
        records = [
            {c: (_round12(v) if isinstance(v, float) else v) for c, v in zip(columns, row)}
            for row in rows
        ]
        payload = json.dumps({"columns": columns, "rows": records}, indent=2) + "\n"
    if out is None:
        sys.stdout.write(payload)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(payload)


def _report_row(report: QcrbReport) -> list:
    return [
        report.family or "",
        report.qcrb,
        report.f,
        report.R,
        report.b2,
        report.n_tilde,
        report.n_bar,
        report.parameter,
    ]


_REPORT_COLUMNS = ["family", "qcrb", "f", "R", "b2", "n_tilde", "n_bar", "parameter"]


def _state_for_qcrb(params: dict):
    family = params["family"]
    if family == "noon":
        return Fock(params["n"])
    if family == "ecs":
        return Coherent(params["alpha"])
    if family == "escs":
        return SqueezedCoherent(params["alpha"], params["r_prime"])
    return SqueezedVacuum(params["r"])


def _cmd_qcrb(params: dict) -> tuple[list[str], list[list]]:
    weighting = Balanced()
    if params.get("b2") is not None:
        weighting = FixedB(params["b2"])
    if params.get("optimized_b"):
        weighting = OptimizedB()
    report = qcrb_closed_form(ProbeSpec(params["d"], _state_for_qcrb(params), weighting))
    report = QcrbReport(
        qcrb=report.qcrb,
        f=report.f,
        R=report.R,
        b2=report.b2,
        n_tilde=report.n_tilde,
        n_bar=report.n_bar,
        family=params["family"],
        parameter=None,
        effective=report.effective,
    )
    return _REPORT_COLUMNS, [_report_row(report)]


def _cmd_compare(params: dict) -> tuple[list[str], list[list]]:
    reports = compare_families_at_nbar(params["d"], params["n_bar"], params["r_prime"])
    return _REPORT_COLUMNS, [_report_row(r) for r in reports]


def _cmd_sweep_escs(params: dict) -> tuple[list[str], list[list]]:
    grid = np.linspace(params["r_min"], params["r_max"], params["steps"])
    curve = escs_sweep_r_prime(params["d"], params["n_bar"], [float(r) for r in grid])
    return ["r_prime", "n_bar", "qcrb"], [[rp, nb, q] for nb, q, rp in curve.points]


def _cmd_unbalanced(params: dict) -> tuple[list[str], list[list]]:
    grid = np.linspace(params["r_min"], params["r_max"], params["steps"])
    bal, unb = balanced_vs_unbalanced_sweep(params["d"], [float(r) for r in grid])
    columns = ["r", "n_bar_balanced", "qcrb_balanced", "n_bar_unbalanced", "qcrb_unbalanced"]
    rows = []
    for (nb_b, q_b, r), (nb_u, q_u, _) in zip(bal.points, unb.points):
        _assert_rows_bounded(params["d"], nb_b, [q_b, q_u])
        rows.append([r, nb_b, q_b, nb_u, q_u])
    _, crossover = compare_sweeps_at_common_nbar(bal, unb)
    if crossover is not None:
        print(f"# crossover n_bar = {_fmt(crossover)}", file=sys.stderr)
    return columns, rows


def _cmd_experiment(params: dict) -> tuple[list[str], list[list]]:
    config = (
        load_circuit_config(params["circuit"]) if params.get("circuit") else default_circuit_config()
    )
    res = run_experiment(params["r"], config=config, cutoff=params.get("cutoff"))
    columns = ["r", "n_bar", "success_prob", "fidelity", "branch_phase"] + [
        f"abs_c{n}" for n in range(len(res.phi_amps))
    ]
    row = [params["r"], res.n_bar, res.success_prob, res.fidelity_to_noonlike, res.branch_phase]
    row += [abs(c) for c in res.phi_amps]
    return columns, [row]


def _assert_rows_bounded(d: int, n_bar: float, values: Sequence[float]) -> None:
    bound = noon_qcrb(d, n_bar) + 1e-12
    if any(v > bound for v in values):
        raise NoonlikeError(f"emitted value exceeds the NOON bound at n_bar={n_bar}")


def _figure_2(params: dict) -> tuple[list[str], list[list]]:
    d = params["d"]
    grid = np.geomspace(params.get("n_min") or 0.5, params.get("n_max") or 20.0, params.get("steps") or 40)
    rows = []
    for n_bar in grid:
        reports = compare_families_at_nbar(d, float(n_bar), params["r_prime"])
        for rep in reports:
            if not noon_bound_check(rep, d):
                raise NoonlikeError(f"bound violated at n_bar={n_bar}")
        rows.append([float(n_bar)] + [r.qcrb for r in reports])
    return ["n_bar", "noon", "ecs", "escs_r1", "esvs"], rows


def _figure_3(params: dict) -> tuple[list[str], list[list]]:
    # The grid starts at 0.75 rather than 0.5: below ~0.61 the squeezed-
    # coherent family with squeeze factor 1.2 cannot reach the target n_bar.
    d = params["d"]
    grid = np.geomspace(params.get("n_min") or 0.75, params.get("n_max") or 20.0, params.get("steps") or 40)
    r_primes = (0.4, 0.8, 1.2)
    rows = []
    for n_bar in grid:
        nb = float(n_bar)
        ecs = qcrb_closed_form(
            ProbeSpec(d, solve_param_for_nbar(FamilyTarget(Family.ECS, d, nb)), Balanced())
        ).qcrb
        esvs = qcrb_closed_form(
            ProbeSpec(d, solve_param_for_nbar(FamilyTarget(Family.ESVS, d, nb)), Balanced())
        ).qcrb
        escs_curve = escs_sweep_r_prime(d, nb, r_primes)
        escs_vals = [q for _, q, _ in escs_curve.points]
        ordered = [ecs] + escs_vals + [esvs]
        if not all(a > b for a, b in zip(ordered, ordered[1:])):
            raise NoonlikeError(f"expected ECS > ESCS(r') > ESVS at n_bar={nb}: {ordered}")
        _assert_rows_bounded(d, nb, ordered)
        rows.append([nb] + ordered)
    return ["n_bar", "ecs", "escs_r0.4", "escs_r0.8", "escs_r1.2", "esvs"], rows


def _figure_4(params: dict) -> tuple[list[str], list[list]]:
    local = dict(params)
    local.setdefault("r_min", None)
    local.setdefault("r_max", None)
    local["r_min"] = local["r_min"] or 0.3
    local["r_max"] = local["r_max"] or 3.0
    local["steps"] = local.get("steps") or 60
    return _cmd_unbalanced(local)


def _figure_6(params: dict) -> tuple[list[str], list[list]]:
    grid = np.linspace(params.get("r_min") or 1.0, params.get("r_max") or 2.0, params.get("steps") or 20)
    config = (
        load_circuit_config(params["circuit"]) if params.get("circuit") else default_circuit_config()
    )
    noon_curve, ecs_curve, phi_curve = experiment_qcrb_comparison(
        [float(r) for r in grid], config=config, cutoff=params.get("cutoff")
    )
    rows = [
        [nb, qn, qe, qp]
        for (nb, qn, _), (_, qe, _), (_, qp, _) in zip(
            noon_curve.points, ecs_curve.points, phi_curve.points
        )
    ]
    return ["n_bar", "noon_effective", "ecs", "phi"], rows


_FIGURES = {2: _figure_2, 3: _figure_3, 4: _figure_4, 6: _figure_6}


def emit_figure(fig_id: int, params: dict, out: Path | None, fmt: str) -> None:
    """Compute one figure dataset and write it (or print to stdout)."""
    if fig_id not in _FIGURES:
        raise UsageError(f"figure id must be one of {_FIGURE_IDS}, got {fig_id}")
    columns, rows = _FIGURES[fig_id](params)
    _write(columns, rows, out, fmt)


def _default_out(params: dict, command: str) -> Path | None:
    out = params.get("out")
    env_dir = os.environ.get("NOONLIKE_OUTPUT_DIR")
    if out is None and env_dir and command == "figure":
        return Path(env_dir) / f"figure_{params['id']}.{params['format']}"
    if out is not None and not out.is_absolute() and env_dir:
        return Path(env_dir) / out
    return out


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
        out = _default_out(cfg.params, cfg.command)
        fmt = cfg.params["format"]
        if cfg.command == "figure":
            emit_figure(cfg.params["id"], cfg.params, out, fmt)
            return 0
        handler = {
            "qcrb": _cmd_qcrb,
            "compare": _cmd_compare,
            "sweep-escs": _cmd_sweep_escs,
            "unbalanced": _cmd_unbalanced,
            "experiment": _cmd_experiment,
        }[cfg.command]
        columns, rows = handler(cfg.params)
        _write(columns, rows, out, fmt)
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (NoonlikeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
