"""Fixed-step trajectory integration for the two solver models.

Both models advance the stacked real state by an explicit one-step
update x(tau_{k+1}) = x(tau_k) + epsilon * d(tau_k):

* dznd1-2i forms d = W^+ b from :func:`~dznd.assembly.assemble_dznd1`,
  where b already folds the gain times the current equation error;
* dznd2-2i forms d = W^+ (b_dot - W_dot x - gamma (W x - b)) from the
  state-independent :func:`~dznd.assembly.assemble_dznd2` blocks.

A run records, at every sample time, the state together with the
equation residual ||X F - A conj(X) - C||_F and the solution error
||X - X*||_F (nan when the problem has no known solution), and stops
early when the state goes non-finite or the residual passes the
divergence threshold.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .assembly import (
    ComplexGain,
    assemble_dznd1,
    assemble_dznd2,
    matrix_from_state,
    state_from_matrix,
)
from .errors import CapabilityError, ConfigError, ShapeError
from .linalg import RealVector, pinv
from .problems import (
    InitialState,
    SylvesterConjugateProblem,
    equation_residual,
    solution_error,
)


class Model(enum.Enum):
    DZND1_2I = "dznd1-2i"
    DZND2_2I = "dznd2-2i"

    @classmethod
    def from_name(cls, name: str) -> "Model":
        for model in cls:
            if model.value == name:
                return model
        known = ", ".join(m.value for m in cls)
        raise KeyError(f"unknown model {name!r}; known models: {known}")


class Outcome(enum.Enum):
    COMPLETED = "COMPLETED"
    DIVERGED = "DIVERGED"


# Relative slack when deciding whether duration/epsilon is an integer.
_STEP_COUNT_SLACK = 1e-9


@dataclass(frozen=True)
class SolverConfig:
    """Everything that determines a run besides the problem and the start."""

    model: Model
    gamma: ComplexGain
    epsilon: float
    duration: float = 10.0
    seed: int = 42
    pinv_tolerance: Optional[float] = None
    divergence_threshold: float = 1e12

    @property
    def step_count(self) -> int:
        return int(round(self.duration / self.epsilon))

    def validate(self) -> None:
        """Raise :class:`ConfigError` naming the first violated invariant."""
        if not 0.0 < self.epsilon < 1.0:
            raise ConfigError(
                f"step size epsilon must lie in (0, 1), got {self.epsilon}"
            )
        if not self.duration > 0.0:
            raise ConfigError(f"duration must be positive, got {self.duration}")
        ratio = self.duration / self.epsilon
        k = round(ratio)
        if k < 1 or abs(ratio - k) > _STEP_COUNT_SLACK * max(1.0, abs(ratio)):
            raise ConfigError(
                f"duration/epsilon = {ratio!r} is not an integral step count"
            )
        if self.model is Model.DZND2_2I and not self.gamma.is_real:
            raise ConfigError(
                f"model {self.model.value} requires a real gain, got {self.gamma}"
            )
        if not self.divergence_threshold > 0.0:
            raise ConfigError(
                f"divergence threshold must be positive, got "
                f"{self.divergence_threshold}"
            )
        if self.pinv_tolerance is not None and self.pinv_tolerance < 0:
            raise ConfigError(
                f"pinv tolerance must be nonnegative, got {self.pinv_tolerance}"
            )


@dataclass(frozen=True)
class Trajectory:
    """Per-step records of a run, stored as aligned arrays.

    Record i holds step index ``steps[i]``, sample time ``taus[i]``
    (= steps[i] * epsilon), the stacked state ``states[i]``, both
    residuals, and whether everything was still finite.
    """

    steps: np.ndarray
    taus: np.ndarray
    states: np.ndarray
    equation_residuals: np.ndarray
    solution_errors: np.ndarray
    finite: np.ndarray
    outcome: Outcome
    diverged_at: Optional[int] = None

    def __len__(self) -> int:
        return len(self.steps)


def tail_max_equation_residual(trajectory: Trajectory, tau_from: float) -> float:
    """Largest equation residual over records with tau >= tau_from."""
    mask = trajectory.taus >= tau_from
    if not mask.any():
        return math.nan
    return float(trajectory.equation_residuals[mask].max())


def tail_max_solution_error(trajectory: Trajectory, tau_from: float) -> float:
    """Largest solution error over records with tau >= tau_from."""
    mask = trajectory.taus >= tau_from
    if not mask.any():
        return math.nan
    return float(trajectory.solution_errors[mask].max())


def scalar_error_modulus(gamma: ComplexGain, epsilon: float) -> float:
    """|1 - epsilon*gamma|: the per-step growth factor of each scalar
    error mode.  Values above one predict divergence of the dznd1 model."""
    return math.hypot(1.0 - epsilon * gamma.re, epsilon * gamma.im)


def step_dznd1(
    problem: SylvesterConjugateProblem,
    state: RealVector,
    gamma: ComplexGain,
    tau: float,
    epsilon: float,
    pinv_tolerance: Optional[float] = None,
) -> RealVector:
    """One update of the complex-field model from the pre-step state."""
    system = assemble_dznd1(problem, state, gamma, tau)
    return state + epsilon * (pinv(system.w, pinv_tolerance) @ system.b)


def step_dznd2(
    problem: SylvesterConjugateProblem,
    state: RealVector,
    gamma: ComplexGain,
    tau: float,
    epsilon: float,
    pinv_tolerance: Optional[float] = None,
) -> RealVector:
    """One update of the real-field model from the pre-step state."""
    if not gamma.is_real:
        raise CapabilityError(
            f"model dznd2-2i is defined for real gains only, got {gamma}"
        )
    system = assemble_dznd2(problem, tau)
    drive = (
        system.b_dot
        - system.w_dot @ state
        - gamma.re * (system.w @ state - system.b)
    )
    return state + epsilon * (pinv(system.w, pinv_tolerance) @ drive)


_STEPPERS = {Model.DZND1_2I: step_dznd1, Model.DZND2_2I: step_dznd2}


def run(
    problem: SylvesterConjugateProblem,
    config: SolverConfig,
    initial: InitialState,
) -> Trajectory:
    """Integrate the configured model over k = duration/epsilon steps.

    Deterministic for fixed inputs.  Halts early with a DIVERGED outcome
    as soon as a record is non-finite or its equation residual exceeds
    the divergence threshold; the offending record is kept.
    """
    config.validate()
    if initial.x0.shape != (problem.m, problem.n):
        raise ShapeError(
            f"initial state shape {initial.x0.shape} does not match problem "
            f"dimensions ({problem.m}, {problem.n})"
        )
    stepper = _STEPPERS[config.model]
    has_solution = problem.theoretical_solution is not None
    k_total = config.step_count

    state = state_from_matrix(initial.x0)
    steps, taus, states = [], [], []
    eq_residuals, sol_errors, finite_flags = [], [], []
    outcome = Outcome.COMPLETED
    diverged_at: Optional[int] = None

    for k in range(k_total + 1):
        tau = k * config.epsilon
        x = matrix_from_state(state, problem.m, problem.n)
        eq = equation_residual(problem, x, tau)
        sol = solution_error(problem, x, tau) if has_solution else math.nan
        finite = bool(np.isfinite(state).all() and np.isfinite(eq))

        steps.append(k)
        taus.append(tau)
        states.append(state)
        eq_residuals.append(eq)
        sol_errors.append(sol)
        finite_flags.append(finite)

        if not finite or eq > config.divergence_threshold:
            outcome = Outcome.DIVERGED
            diverged_at = k
            break
        if k == k_total:
            break
        state = stepper(
            problem, state, config.gamma, tau, config.epsilon,
            config.pinv_tolerance,
        )

    return Trajectory(
        steps=np.array(steps, dtype=np.int64),
        taus=np.array(taus, dtype=np.float64),
        states=np.array(states, dtype=np.float64),
        equation_residuals=np.array(eq_residuals, dtype=np.float64),
        solution_errors=np.array(sol_errors, dtype=np.float64),
        finite=np.array(finite_flags, dtype=bool),
        outcome=outcome,
        diverged_at=diverged_at,
    )
