"""Self-contained property checks behind the ``verify`` CLI command.

Each group re-derives its expected values from an independent route
(direct complex arithmetic, the Penrose axioms, hand-derived constants),
so a fresh checkout can be validated without the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .assembly import (
    ComplexGain,
    characteristic_roots,
    is_zero_stable,
    zero_stability_roots,
)
from .linalg import (
    SplitComplexMatrix,
    conjugate,
    conjugate_transpose,
    kron,
    pinv,
    vec,
)
from .problems import PROBLEMS, equation_residual
from .solvers import scalar_error_modulus


@dataclass
class GroupResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)


def _random_split(rng, rows, cols) -> SplitComplexMatrix:
    return SplitComplexMatrix(
        rng.normal(size=(rows, cols)), rng.normal(size=(rows, cols))
    )


def check_kron_vec_identity(seed: int = 0, trials: int = 300) -> GroupResult:
    """vec(A X B) equals (conj(B^H) kron A) vec(X), complex and real."""
    rng = np.random.default_rng(seed)
    worst_complex = worst_real = 0.0
    for _ in range(trials):
        m, k, s, t = rng.integers(1, 4, size=4)
        a = _random_split(rng, m, k)
        x = _random_split(rng, k, s)
        b = _random_split(rng, s, t)
        lhs = vec(a @ x @ b)
        rhs = kron(conjugate(conjugate_transpose(b)), a) @ vec(x)
        dev = max(
            np.abs(lhs.re - rhs.re).max(), np.abs(lhs.im - rhs.im).max()
        )
        # independent route: plain complex arithmetic
        direct = (a.to_complex() @ x.to_complex() @ b.to_complex()).flatten(
            order="F"
        )
        dev = max(dev, np.abs(lhs.to_complex().ravel() - direct).max())
        worst_complex = max(worst_complex, dev)

        ar = SplitComplexMatrix.from_real(rng.normal(size=(m, k)))
        xr = SplitComplexMatrix.from_real(rng.normal(size=(k, s)))
        br = SplitComplexMatrix.from_real(rng.normal(size=(s, t)))
        lhs_r = vec(ar @ xr @ br)
        rhs_r = kron(
            SplitComplexMatrix.from_real(br.re.T), ar
        ) @ vec(xr)
        worst_real = max(worst_real, np.abs(lhs_r.re - rhs_r.re).max())
    passed = worst_complex <= 1e-12 and worst_real <= 1e-12
    return GroupResult(
        "kron-vec identity",
        passed,
        [
            f"{trials} random complex triples, max deviation {worst_complex:.3e}",
            f"real-matrix case max deviation {worst_real:.3e}",
        ],
    )


def check_penrose_conditions(seed: int = 1, tol: float = 1e-10) -> GroupResult:
    """All four Penrose axioms for the SVD pseudo-inverse."""
    rng = np.random.default_rng(seed)
    cases = []
    for size in (4, 8, 12):
        cases.append(rng.normal(size=(size, size)))
    low = rng.normal(size=(12, 5)) @ rng.normal(size=(5, 12))  # rank 5
    cases.append(low)
    cases.append(np.diag([2.0, 0.0]))
    worst = 0.0
    for w in cases:
        wp = pinv(w)
        worst = max(
            worst,
            np.abs(w @ wp @ w - w).max(),
            np.abs(wp @ w @ wp - wp).max(),
            np.abs((w @ wp) - (w @ wp).T).max(),
            np.abs((wp @ w) - (wp @ w).T).max(),
        )
    return GroupResult(
        "pseudo-inverse Penrose conditions",
        worst <= tol,
        [f"{len(cases)} matrices up to 12x12, worst deviation {worst:.3e}"],
    )


def check_theoretical_solutions(tol: float = 1e-10) -> GroupResult:
    """Registered exact solutions satisfy their equations on a tau grid."""
    details = []
    passed = True
    for name, factory in sorted(PROBLEMS.items()):
        problem = factory()
        worst = max(
            equation_residual(
                problem, problem.theoretical_solution(tau), tau
            )
            for tau in np.linspace(0.0, 10.0, 101)
        )
        details.append(f"{name}: max residual over 101 times {worst:.3e}")
        passed = passed and worst <= tol
    return GroupResult("theoretical-solution residuals", passed, details)


def check_zero_stability() -> GroupResult:
    roots = zero_stability_roots()
    ok_scheme = (
        roots.shape == (1,)
        and abs(roots[0] - 1.0) <= 1e-12
        and is_zero_stable(roots)
    )
    double_root = characteristic_roots([1.0, -2.0, 1.0])  # (delta - 1)^2
    ok_double = not is_zero_stable(double_root)
    inside = characteristic_roots([-0.5, 1.0])  # delta - 0.5
    ok_inside = is_zero_stable(inside)
    return GroupResult(
        "zero-stability",
        ok_scheme and ok_double and ok_inside,
        [
            f"one-step scheme roots {np.round(roots, 12).tolist()} -> "
            f"0-stable: {is_zero_stable(roots)}",
            f"double unit root counterexample rejected: {ok_double}",
            f"root inside unit circle accepted: {ok_inside}",
        ],
    )


def check_scalar_modulus_table() -> GroupResult:
    """|1 - epsilon*gamma| against hand-derived reference values."""
    gains = [ComplexGain(10.0), ComplexGain(10.0, 20.0), ComplexGain(10.0, -20.0)]
    details = []
    for gain in gains:
        for eps in (0.1, 0.001):
            value = scalar_error_modulus(gain, eps)
            verdict = "diverges" if value > 1.0 else "converges"
            details.append(
                f"gamma={gain} epsilon={eps:g}: modulus={value:.6f} ({verdict})"
            )
    checks = [
        abs(scalar_error_modulus(ComplexGain(10.0), 0.1) - 0.0) <= 1e-12,
        abs(scalar_error_modulus(ComplexGain(10.0, 20.0), 0.1) - 2.0) <= 1e-12,
        abs(scalar_error_modulus(ComplexGain(10.0, 20.0), 0.001) - 0.9902) <= 5e-5,
        abs(scalar_error_modulus(ComplexGain(10.0, -20.0), 0.1) - 2.0) <= 1e-12,
    ]
    return GroupResult("gain-step modulus table", all(checks), details)


def run_verification(seed: int = 0) -> list[GroupResult]:
    return [
        check_kron_vec_identity(seed),
        check_penrose_conditions(seed + 1),
        check_theoretical_solutions(),
        check_zero_stability(),
        check_scalar_modulus_table(),
    ]
