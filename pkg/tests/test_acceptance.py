"""Release acceptance gate.

One test per criterion; each prints a verdict line with measured values
(run with ``pytest -s tests/test_acceptance.py`` to see them) and then
asserts.  Criteria 3 and 4 encode the quadratic steady-state-residual
expectation at the fixed gain 10; the implemented one-step schemes are
measurably first order in the step size at a fixed gain (quadratic only
when gain*step is held constant), so those two checks fail honestly.
See the repository notes for the analysis.
"""

import math
import time

import numpy as np
import pytest

from dznd import (
    ComplexGain,
    Model,
    Outcome,
    SolverConfig,
    SplitComplexMatrix,
    conjugate,
    conjugate_transpose,
    equation_residual,
    get_problem,
    is_zero_stable,
    kron,
    pinv,
    random_initial_state,
    run,
    scalar_error_modulus,
    tail_max_equation_residual,
    transpose,
    vec,
    zero_stability_roots,
)
from dznd.assembly import characteristic_roots
from dznd.cli import main as cli_main
from helpers import random_split

GAMMA10 = ComplexGain(10.0)


def _verdict(number: int, ok: bool, detail: str) -> bool:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} | {detail}")
    return ok


@pytest.fixture(scope="module")
def gain10_grid():
    """All gamma=10 runs shared by criteria 3 and 4."""
    started = time.perf_counter()
    runs = {}
    for name, epsilons in (("example1", (0.001,)),
                           ("example2", (0.1, 0.01, 0.001))):
        problem = get_problem(name)
        initial = random_initial_state(problem, 42)
        for model in Model:
            for epsilon in epsilons:
                config = SolverConfig(model=model, gamma=GAMMA10, epsilon=epsilon)
                runs[(name, model, epsilon)] = run(problem, config, initial)
    return runs, time.perf_counter() - started


def test_criterion_1_theoretical_solution_residuals():
    started = time.perf_counter()
    worst = {}
    for name in ("example1", "example2"):
        problem = get_problem(name)
        worst[name] = max(
            equation_residual(problem, problem.theoretical_solution(tau), tau)
            for tau in np.linspace(0.0, 10.0, 101)
        )
    elapsed = time.perf_counter() - started
    ok = all(v <= 1e-10 for v in worst.values()) and elapsed < 1.0
    detail = (
        f"max residual example1={worst['example1']:.3e} "
        f"example2={worst['example2']:.3e} (bound 1e-10), {elapsed:.2f}s (<1s)"
    )
    assert _verdict(1, ok, detail), detail


def test_criterion_2_kron_vec_identity():
    started = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst_complex = worst_real = 0.0
    for _ in range(1000):
        m, k, s, t = rng.integers(1, 4, size=4)
        a, x, b = (random_split(rng, m, k), random_split(rng, k, s),
                   random_split(rng, s, t))
        lhs = vec(a @ x @ b)
        rhs = kron(conjugate(conjugate_transpose(b)), a) @ vec(x)
        dev = max(np.abs(lhs.re - rhs.re).max(), np.abs(lhs.im - rhs.im).max())
        direct = (a.to_complex() @ x.to_complex() @ b.to_complex()).flatten(order="F")
        dev = max(dev, np.abs(lhs.to_complex().ravel() - direct).max())
        worst_complex = max(worst_complex, dev)
    for _ in range(1000):
        m, k, s, t = rng.integers(1, 4, size=4)
        a = SplitComplexMatrix.from_real(rng.normal(size=(m, k)))
        x = SplitComplexMatrix.from_real(rng.normal(size=(k, s)))
        b = SplitComplexMatrix.from_real(rng.normal(size=(s, t)))
        lhs = vec(a @ x @ b)
        rhs = kron(transpose(b), a) @ vec(x)
        worst_real = max(worst_real, np.abs(lhs.re - rhs.re).max())
    elapsed = time.perf_counter() - started
    ok = worst_complex <= 1e-12 and worst_real <= 1e-12 and elapsed < 5.0
    detail = (
        f"1000 complex triples max dev {worst_complex:.3e}, real-matrix case "
        f"{worst_real:.3e} (bound 1e-12), {elapsed:.2f}s (<5s)"
    )
    assert _verdict(2, ok, detail), detail


def test_criterion_3_convergence_at_gain_10(gain10_grid):
    runs, build_seconds = gain10_grid
    started = time.perf_counter()
    cases = []
    for model in Model:
        cases.append(("example2", model, 0.001, 1e-4))
        cases.append(("example2", model, 0.1, 1e-1))
        cases.append(("example1", model, 0.001, 1e-8))
    measurements = []
    ok = True
    for name, model, epsilon, bound in cases:
        trajectory = runs[(name, model, epsilon)]
        tail = tail_max_equation_residual(trajectory, 5.0)
        completed = trajectory.outcome is Outcome.COMPLETED
        passed = completed and tail <= bound
        ok = ok and passed
        measurements.append(
            f"{name}/{model.value}@eps={epsilon:g}: tail={tail:.3e} "
            f"(bound {bound:g}){'' if passed else ' <-FAIL'}"
        )
    elapsed = build_seconds + (time.perf_counter() - started)
    ok = ok and elapsed < 30.0
    detail = "; ".join(measurements) + f"; {elapsed:.1f}s (<30s)"
    assert _verdict(3, ok, detail), detail


def test_criterion_4_order_of_steady_state_residual(gain10_grid):
    runs, build_seconds = gain10_grid
    started = time.perf_counter()
    epsilons = (0.1, 0.01, 0.001)
    slopes = {}
    for model in Model:
        tails = [
            tail_max_equation_residual(runs[("example2", model, eps)], 5.0)
            for eps in epsilons
        ]
        slopes[model] = float(
            np.polyfit(np.log(epsilons), np.log(tails), 1)[0]
        )
    elapsed = build_seconds + (time.perf_counter() - started)
    ok = all(1.7 <= s <= 2.3 for s in slopes.values()) and elapsed < 120.0
    detail = (
        f"log-log slope dznd1-2i={slopes[Model.DZND1_2I]:.3f}, "
        f"dznd2-2i={slopes[Model.DZND2_2I]:.3f} (window [1.7, 2.3]); "
        f"{elapsed:.1f}s (<2min)"
    )
    assert _verdict(4, ok, detail), detail


def test_criterion_5_complex_gain_dichotomy(gain10_grid):
    runs, _ = gain10_grid
    started = time.perf_counter()
    gains = (ComplexGain(10.0, 20.0), ComplexGain(10.0, -20.0))
    measurements = []
    ok = True

    modulus_big = scalar_error_modulus(gains[0], 0.1)
    modulus_small = scalar_error_modulus(gains[0], 0.001)
    ok = ok and modulus_big == 2.0 and abs(modulus_small - 0.9902) <= 5e-5
    ok = ok and modulus_big > 1.0 and modulus_small < 1.0
    measurements.append(
        f"modulus eps=0.1: {modulus_big} (expect 2.0), "
        f"eps=0.001: {modulus_small:.6f} (expect ~0.9902)"
    )

    for name in ("example1", "example2"):
        problem = get_problem(name)
        initial = random_initial_state(problem, 42)
        baseline = tail_max_equation_residual(
            runs[(name, Model.DZND1_2I, 0.001)], 5.0
        )
        for gain in gains:
            coarse = run(
                problem,
                SolverConfig(model=Model.DZND1_2I, gamma=gain, epsilon=0.1),
                initial,
            )
            diverged = coarse.outcome is Outcome.DIVERGED
            fine = run(
                problem,
                SolverConfig(model=Model.DZND1_2I, gamma=gain, epsilon=0.001),
                initial,
            )
            completed = fine.outcome is Outcome.COMPLETED
            tail = tail_max_equation_residual(fine, 5.0)
            ratio = tail / baseline
            in_band = 0.1 <= ratio <= 10.0
            ok = ok and diverged and completed and in_band
            measurements.append(
                f"{name}/gamma={gain}: eps=0.1 {coarse.outcome.value}, "
                f"eps=0.001 {fine.outcome.value} tail/baseline={ratio:.2f}"
            )
    elapsed = time.perf_counter() - started
    ok = ok and elapsed < 60.0
    detail = "; ".join(measurements) + f"; {elapsed:.1f}s (<1min)"
    assert _verdict(5, ok, detail), detail


def test_criterion_6_zero_stability():
    roots = zero_stability_roots()
    scheme_ok = (
        roots.shape == (1,)
        and abs(roots[0] - 1.0) <= 1e-12
        and is_zero_stable(roots)
    )
    double_rejected = not is_zero_stable(characteristic_roots([1.0, -2.0, 1.0]))
    inside_accepted = is_zero_stable(characteristic_roots([-0.5, 1.0]))
    ok = scheme_ok and double_rejected and inside_accepted
    detail = (
        f"scheme roots={np.round(roots, 12).tolist()} stable={scheme_ok}, "
        f"double-unit-root rejected={double_rejected}, "
        f"inside-circle accepted={inside_accepted}"
    )
    assert _verdict(6, ok, detail), detail


def test_criterion_7_run_determinism(tmp_path):
    args = [
        "run", "--problem", "example2", "--model", "dznd1-2i", "--gamma", "10",
        "--epsilon", "0.1", "--seed", "42", "--out", str(tmp_path),
    ]
    assert cli_main(args) == 0
    first = (tmp_path / "trajectory.csv").read_bytes()
    assert cli_main(args) == 0
    second = (tmp_path / "trajectory.csv").read_bytes()
    ok = first == second and len(first) > 0
    detail = f"two identical invocations, {len(first)} bytes, byte-equal={ok}"
    assert _verdict(7, ok, detail), detail


def test_criterion_8_penrose_conditions():
    rng = np.random.default_rng(8)
    worst = 0.0
    cases = [rng.normal(size=(size, size)) for size in (4, 8, 12)]
    for size, rank in ((6, 2), (12, 5), (9, 4)):
        cases.append(rng.normal(size=(size, rank)) @ rng.normal(size=(rank, size)))
    for w in cases:
        wp = pinv(w)
        worst = max(
            worst,
            np.abs(w @ wp @ w - w).max(),
            np.abs(wp @ w @ wp - wp).max(),
            np.abs(w @ wp - (w @ wp).T).max(),
            np.abs(wp @ w - (wp @ w).T).max(),
        )
    ok = worst <= 1e-10
    detail = f"{len(cases)} matrices up to 12x12, worst Penrose deviation {worst:.3e}"
    assert _verdict(8, ok, detail), detail
