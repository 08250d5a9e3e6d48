"""File outputs for single runs and step-size/gain sweeps.

All numeric CSV fields use shortest round-trip decimal formatting
(``repr`` of the float), so files parse back to bit-identical values and
repeated runs with the same inputs produce byte-identical trajectory
files.  Sweep rows additionally record wall time, which naturally varies
between invocations.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .assembly import ComplexGain
from .problems import SylvesterConjugateProblem, random_initial_state
from .solvers import (
    Model,
    Outcome,
    SolverConfig,
    Trajectory,
    run,
    scalar_error_modulus,
    tail_max_equation_residual,
    tail_max_solution_error,
)
from .svgplot import log_line_chart

_MODEL_COLORS = {Model.DZND1_2I: "#cc2222", Model.DZND2_2I: "#22aa44"}


def _fmt(value: float) -> str:
    return repr(float(value))


def state_column_names(m: int, n: int) -> list[str]:
    """CSV column names for the stacked state, in state-vector order
    (column-major within each part, real block first), 1-based indices."""
    names = []
    for part in ("re", "im"):
        for t in range(1, n + 1):
            for s in range(1, m + 1):
                names.append(f"x_{part}_{s}_{t}")
    return names


def write_trajectory_csv(path: Path, trajectory: Trajectory, m: int, n: int) -> None:
    header = ["step", "tau", "equation_residual", "solution_error"]
    header += state_column_names(m, n)
    lines = [",".join(header)]
    for i in range(len(trajectory)):
        fields = [
            str(int(trajectory.steps[i])),
            _fmt(trajectory.taus[i]),
            _fmt(trajectory.equation_residuals[i]),
            _fmt(trajectory.solution_errors[i]),
        ]
        fields += [_fmt(v) for v in trajectory.states[i]]
        lines.append(",".join(fields))
    path.write_text("\n".join(lines) + "\n")


def write_run_summary(
    path: Path,
    problem_name: str,
    config: SolverConfig,
    trajectory: Trajectory,
) -> None:
    modulus = scalar_error_modulus(config.gamma, config.epsilon)
    prediction = "divergence" if modulus > 1.0 else "convergence"
    lines = [
        f"problem: {problem_name}",
        f"model: {config.model.value}",
        f"outcome: {trajectory.outcome.value}",
        f"k: {config.step_count}",
        f"records: {len(trajectory)}",
        f"epsilon: {_fmt(config.epsilon)}",
        f"gamma: {config.gamma}",
        f"seed: {config.seed}",
        f"duration: {_fmt(config.duration)}",
        f"divergence_threshold: {_fmt(config.divergence_threshold)}",
        f"final_equation_residual: {_fmt(trajectory.equation_residuals[-1])}",
        f"final_solution_error: {_fmt(trajectory.solution_errors[-1])}",
        f"scalar_error_modulus: {_fmt(modulus)} (predicts {prediction}); "
        f"observed outcome: {trajectory.outcome.value}",
    ]
    if trajectory.diverged_at is not None:
        lines.append(f"diverged_at_step: {trajectory.diverged_at}")
    path.write_text("\n".join(lines) + "\n")


def write_residual_svg(
    path: Path,
    problem_name: str,
    config: SolverConfig,
    trajectory: Trajectory,
) -> None:
    series = [
        (
            "equation residual",
            list(trajectory.equation_residuals),
            "#3366cc",
        )
    ]
    if not np.all(np.isnan(trajectory.solution_errors)):
        series.append(
            (
                "solution error",
                list(trajectory.solution_errors),
                _MODEL_COLORS[config.model],
            )
        )
    svg = log_line_chart(
        title=(
            f"{problem_name} / {config.model.value} / gamma={config.gamma} "
            f"/ epsilon={config.epsilon:g}"
        ),
        x=list(trajectory.taus),
        series=series,
        y_label="log10 residual",
    )
    path.write_text(svg)


# ---------------------------------------------------------------------------
# Sweeps over (model, gamma, epsilon) grids.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    epsilon: float
    gamma: ComplexGain
    model: Model
    outcome: str
    tail_max_equation_residual: float
    tail_max_solution_error: float
    steps: int
    wall_time_seconds: float


@dataclass(frozen=True)
class OrderFit:
    """Least-squares slope of log(tail residual) against log(epsilon)."""

    model: Model
    gamma: ComplexGain
    points: int
    equation_slope: Optional[float]
    solution_slope: Optional[float]


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]
    fits: tuple[OrderFit, ...]
    tail_from: float


def run_sweep(
    problem: SylvesterConjugateProblem,
    problem_name: str,
    models: Sequence[Model],
    gammas: Sequence[ComplexGain],
    epsilons: Sequence[float],
    duration: float = 10.0,
    seed: int = 42,
    divergence_threshold: float = 1e12,
    pinv_tolerance: Optional[float] = None,
) -> SweepReport:
    """Run every grid point; failures become rows, never aborts.

    Tail statistics cover the second half of the horizon and are reported
    only for completed runs.
    """
    tail_from = duration / 2.0
    rows = []
    for model in models:
        for gamma in gammas:
            for epsilon in epsilons:
                config = SolverConfig(
                    model=model,
                    gamma=gamma,
                    epsilon=epsilon,
                    duration=duration,
                    seed=seed,
                    pinv_tolerance=pinv_tolerance,
                    divergence_threshold=divergence_threshold,
                )
                started = time.perf_counter()
                try:
                    trajectory = run(
                        problem, config, random_initial_state(problem, seed)
                    )
                    outcome = trajectory.outcome.value
                    if trajectory.outcome is Outcome.COMPLETED:
                        tail_eq = tail_max_equation_residual(trajectory, tail_from)
                        tail_sol = tail_max_solution_error(trajectory, tail_from)
                    else:
                        tail_eq = tail_sol = math.nan
                    steps = len(trajectory)
                except Exception as exc:  # noqa: BLE001 - row-per-failure contract
                    outcome = f"ERROR({type(exc).__name__})"
                    tail_eq = tail_sol = math.nan
                    steps = 0
                rows.append(
                    SweepRow(
                        epsilon=epsilon,
                        gamma=gamma,
                        model=model,
                        outcome=outcome,
                        tail_max_equation_residual=tail_eq,
                        tail_max_solution_error=tail_sol,
                        steps=steps,
                        wall_time_seconds=time.perf_counter() - started,
                    )
                )
    rows.sort(key=lambda r: (r.model.value, r.gamma.re, r.gamma.im, r.epsilon))
    return SweepReport(
        rows=tuple(rows), fits=tuple(_fit_orders(rows)), tail_from=tail_from
    )


def _loglog_slope(epsilons: list[float], tails: list[float]) -> Optional[float]:
    pairs = [
        (e, t)
        for e, t in zip(epsilons, tails)
        if math.isfinite(t) and t > 0.0
    ]
    if len({e for e, _ in pairs}) < 3:
        return None
    xs = np.log([e for e, _ in pairs])
    ys = np.log([t for _, t in pairs])
    return float(np.polyfit(xs, ys, 1)[0])


def _fit_orders(rows: Sequence[SweepRow]) -> list[OrderFit]:
    groups: dict[tuple, list[SweepRow]] = {}
    for row in rows:
        groups.setdefault((row.model, row.gamma), []).append(row)
    fits = []
    for (model, gamma), members in sorted(
        groups.items(), key=lambda kv: (kv[0][0].value, kv[0][1].re, kv[0][1].im)
    ):
        completed = [r for r in members if r.outcome == Outcome.COMPLETED.value]
        if len({r.epsilon for r in completed}) < 3:
            fits.append(OrderFit(model, gamma, len(completed), None, None))
            continue
        eps = [r.epsilon for r in completed]
        fits.append(
            OrderFit(
                model=model,
                gamma=gamma,
                points=len(completed),
                equation_slope=_loglog_slope(
                    eps, [r.tail_max_equation_residual for r in completed]
                ),
                solution_slope=_loglog_slope(
                    eps, [r.tail_max_solution_error for r in completed]
                ),
            )
        )
    return fits


def write_sweep_csv(path: Path, report: SweepReport) -> None:
    header = (
        "epsilon,gamma,model,outcome,tail_max_equation_residual,"
        "tail_max_solution_error,steps,wall_time_seconds"
    )
    lines = [header]
    for r in report.rows:
        lines.append(
            ",".join(
                [
                    _fmt(r.epsilon),
                    str(r.gamma),
                    r.model.value,
                    r.outcome,
                    _fmt(r.tail_max_equation_residual),
                    _fmt(r.tail_max_solution_error),
                    str(r.steps),
                    _fmt(r.wall_time_seconds),
                ]
            )
        )
    path.write_text("\n".join(lines) + "\n")


def write_order_report(path: Path, report: SweepReport) -> None:
    lines = [
        "least-squares slope of log(tail-max residual) vs log(epsilon)",
        f"tail window: tau >= {report.tail_from:g}",
        "",
        "model      gamma          points  slope(equation)  slope(solution)",
    ]
    for fit in report.fits:
        eq = "n/a" if fit.equation_slope is None else f"{fit.equation_slope:.4f}"
        sol = "n/a" if fit.solution_slope is None else f"{fit.solution_slope:.4f}"
        lines.append(
            f"{fit.model.value:<10} {str(fit.gamma):<14} {fit.points:<7} "
            f"{eq:<16} {sol}"
        )
    lines.append("")
    lines.append("rows (completed runs only contribute to fits):")
    for r in report.rows:
        lines.append(
            f"  model={r.model.value} gamma={r.gamma} epsilon={r.epsilon:g} "
            f"outcome={r.outcome} tail_eq={r.tail_max_equation_residual:.6e} "
            f"tail_sol={r.tail_max_solution_error:.6e}"
        )
    path.write_text("\n".join(lines) + "\n")
