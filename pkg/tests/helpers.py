"""Shared oracles and factories for the test suite.

The oracles deliberately avoid the package's own kernels: complex
products are computed entry by entry with Python complex scalars, so any
systematic error in the split arithmetic cannot cancel out.
"""

from __future__ import annotations

import numpy as np

from dznd import SplitComplexMatrix, SylvesterConjugateProblem


def random_split(rng, rows: int, cols: int, scale: float = 1.0) -> SplitComplexMatrix:
    return SplitComplexMatrix(
        scale * rng.normal(size=(rows, cols)),
        scale * rng.normal(size=(rows, cols)),
    )


def scalar_matmul_oracle(a: SplitComplexMatrix, b: SplitComplexMatrix):
    """Entry-by-entry complex product using Python scalars."""
    rows, inner = a.shape
    cols = b.cols
    out = np.zeros((rows, cols), dtype=complex)
    for s in range(rows):
        for t in range(cols):
            acc = 0j
            for p in range(inner):
                acc += complex(a.re[s, p], a.im[s, p]) * complex(
                    b.re[p, t], b.im[p, t]
                )
            out[s, t] = acc
    return out


def make_trig_problem(m: int, n: int, seed: int) -> SylvesterConjugateProblem:
    """Random time-variant problem F(t) = F0 + F1 sin(t) etc., with
    analytic derivatives and no known solution."""
    rng = np.random.default_rng(seed)
    base = {key: random_split(rng, *shape) for key, shape in
            {"f0": (n, n), "f1": (n, n), "a0": (m, m), "a1": (m, m),
             "c0": (m, n), "c1": (m, n)}.items()}

    def lincomb(m0, m1, w):
        return SplitComplexMatrix(m0.re + w * m1.re, m0.im + w * m1.im)

    def coefficients(tau):
        s = np.sin(tau)
        return (
            lincomb(base["f0"], base["f1"], s),
            lincomb(base["a0"], base["a1"], s),
            lincomb(base["c0"], base["c1"], s),
        )

    def derivatives(tau):
        c = np.cos(tau)
        zero_f = SplitComplexMatrix(np.zeros((n, n)), np.zeros((n, n)))
        zero_a = SplitComplexMatrix(np.zeros((m, m)), np.zeros((m, m)))
        zero_c = SplitComplexMatrix(np.zeros((m, n)), np.zeros((m, n)))
        return (
            lincomb(zero_f, base["f1"], c),
            lincomb(zero_a, base["a1"], c),
            lincomb(zero_c, base["c1"], c),
        )

    return SylvesterConjugateProblem(
        m=m, n=n, coefficients=coefficients, derivatives=derivatives,
        label=f"trig-{m}x{n}-{seed}",
    )
