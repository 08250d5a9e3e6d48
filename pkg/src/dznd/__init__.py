"""Discrete zeroing-neural-dynamics solvers for time-variant
Sylvester-conjugate matrix equations, with a split-complex matrix kernel
and an experiment CLI."""

from .assembly import (
    AssembledSystem,
    ComplexGain,
    assemble_dznd1,
    assemble_dznd2,
    characteristic_roots,
    euler_forward_characteristic,
    is_zero_stable,
    matrix_from_state,
    state_from_matrix,
    zero_stability_roots,
)
from .errors import CapabilityError, ConfigError, NumericError, ShapeError
from .linalg import (
    RealMatrix,
    RealVector,
    SplitComplexMatrix,
    complex_matmul,
    conjugate,
    conjugate_transpose,
    frobenius_norm,
    identity,
    kron,
    pinv,
    transpose,
    unvec,
    vec,
    zeros,
)
from .problems import (
    InitialState,
    PROBLEMS,
    SylvesterConjugateProblem,
    equation_residual,
    example1,
    example2,
    finite_difference_derivatives,
    get_problem,
    random_initial_state,
    solution_error,
)
from .solvers import (
    Model,
    Outcome,
    SolverConfig,
    Trajectory,
    run,
    scalar_error_modulus,
    step_dznd1,
    step_dznd2,
    tail_max_equation_residual,
    tail_max_solution_error,
)

__all__ = [
    "AssembledSystem",
    "CapabilityError",
    "ComplexGain",
    "ConfigError",
    "InitialState",
    "Model",
    "NumericError",
    "Outcome",
    "PROBLEMS",
    "RealMatrix",
    "RealVector",
    "ShapeError",
    "SolverConfig",
    "SplitComplexMatrix",
    "SylvesterConjugateProblem",
    "Trajectory",
    "assemble_dznd1",
    "assemble_dznd2",
    "characteristic_roots",
    "complex_matmul",
    "conjugate",
    "conjugate_transpose",
    "equation_residual",
    "euler_forward_characteristic",
    "example1",
    "example2",
    "finite_difference_derivatives",
    "frobenius_norm",
    "get_problem",
    "identity",
    "is_zero_stable",
    "kron",
    "matrix_from_state",
    "pinv",
    "random_initial_state",
    "run",
    "scalar_error_modulus",
    "solution_error",
    "state_from_matrix",
    "step_dznd1",
    "step_dznd2",
    "tail_max_equation_residual",
    "tail_max_solution_error",
    "transpose",
    "unvec",
    "vec",
    "zero_stability_roots",
    "zeros",
]

__version__ = "0.1.0"
