"""Dense real and split-complex matrix kernel.

A complex matrix is stored as two real float64 matrices, its real part
and its imaginary part.  Every kernel below works on the parts with real
arithmetic only, so a matrix whose imaginary part is all-zero behaves
exactly like a real matrix under every operation.

Conventions, fixed repo-wide:

* real blocks are C-contiguous (row-major) float64 numpy arrays;
* ``vec`` stacks columns (column-major traversal);
* non-finite values propagate through the arithmetic kernels; they are
  never masked, so divergence stays observable to the caller.  The one
  exception is :func:`pinv`, which needs a finite matrix to factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .errors import NumericError, ShapeError

# Plain numpy arrays act as the real matrix/vector types.
RealMatrix = npt.NDArray[np.float64]
RealVector = npt.NDArray[np.float64]


def _as_real_block(value) -> RealMatrix:
    arr = np.array(value, dtype=np.float64, order="C")
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-D real block, got ndim={arr.ndim}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SplitComplexMatrix:
    """Complex matrix held as (real part, imaginary part).

    Both parts are frozen read-only arrays of identical shape, so values
    are safe to share across threads.
    """

    re: RealMatrix
    im: RealMatrix

    def __post_init__(self):
        object.__setattr__(self, "re", _as_real_block(self.re))
        object.__setattr__(self, "im", _as_real_block(self.im))
        if self.re.shape != self.im.shape:
            raise ShapeError(
                f"real part {self.re.shape} and imaginary part "
                f"{self.im.shape} differ in shape"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.re.shape

    @property
    def rows(self) -> int:
        return self.re.shape[0]

    @property
    def cols(self) -> int:
        return self.re.shape[1]

    @classmethod
    def from_real(cls, re) -> "SplitComplexMatrix":
        re = np.asarray(re, dtype=np.float64)
        return cls(re, np.zeros_like(re))

    @classmethod
    def from_complex(cls, z) -> "SplitComplexMatrix":
        z = np.asarray(z, dtype=np.complex128)
        return cls(z.real, z.imag)

    def to_complex(self) -> npt.NDArray[np.complex128]:
        return self.re + 1j * self.im

    def __add__(self, other: "SplitComplexMatrix") -> "SplitComplexMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return SplitComplexMatrix(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "SplitComplexMatrix") -> "SplitComplexMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return SplitComplexMatrix(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "SplitComplexMatrix":
        return SplitComplexMatrix(-self.re, -self.im)

    def __matmul__(self, other: "SplitComplexMatrix") -> "SplitComplexMatrix":
        return complex_matmul(self, other)


def zeros(rows: int, cols: int) -> SplitComplexMatrix:
    return SplitComplexMatrix(np.zeros((rows, cols)), np.zeros((rows, cols)))


def identity(n: int) -> SplitComplexMatrix:
    return SplitComplexMatrix(np.eye(n), np.zeros((n, n)))


def complex_matmul(a: SplitComplexMatrix, b: SplitComplexMatrix) -> SplitComplexMatrix:
    """Product (a_re + i a_im)(b_re + i b_im) via four real products."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return SplitComplexMatrix(
        a.re @ b.re - a.im @ b.im,
        a.re @ b.im + a.im @ b.re,
    )


def conjugate(m: SplitComplexMatrix) -> SplitComplexMatrix:
    """Entrywise complex conjugate: real part kept, imaginary part negated."""
    return SplitComplexMatrix(m.re, -m.im)


def transpose(m: SplitComplexMatrix) -> SplitComplexMatrix:
    """Unconjugated transpose of both parts."""
    return SplitComplexMatrix(m.re.T, m.im.T)


def conjugate_transpose(m: SplitComplexMatrix) -> SplitComplexMatrix:
    """Hermitian transpose: transpose with negated imaginary part."""
    return SplitComplexMatrix(m.re.T, -m.im.T)


def vec(m: SplitComplexMatrix) -> SplitComplexMatrix:
    """Column-stack a matrix into an (rows*cols) x 1 column.

    Entry (s, t) of the input lands at position t*rows + s, so
    ``vec(x).re == vec(x.re)`` holds part by part.
    """
    return SplitComplexMatrix(
        m.re.reshape(-1, 1, order="F"),
        m.im.reshape(-1, 1, order="F"),
    )


def unvec(v: SplitComplexMatrix, rows: int, cols: int) -> SplitComplexMatrix:
    """Inverse of :func:`vec`: reshape a column back to rows x cols."""
    if v.cols != 1:
        raise ShapeError(f"expected a column, got shape {v.shape}")
    if v.rows != rows * cols:
        raise ShapeError(
            f"column of length {v.rows} cannot fill a {rows}x{cols} matrix"
        )
    return SplitComplexMatrix(
        v.re.reshape(rows, cols, order="F"),
        v.im.reshape(rows, cols, order="F"),
    )


def kron(a: SplitComplexMatrix, b: SplitComplexMatrix) -> SplitComplexMatrix:
    """Kronecker product; Kronecker is bilinear so the parts combine like
    a scalar complex product."""
    return SplitComplexMatrix(
        np.kron(a.re, b.re) - np.kron(a.im, b.im),
        np.kron(a.re, b.im) + np.kron(a.im, b.re),
    )


def frobenius_norm(m: SplitComplexMatrix) -> float:
    """sqrt of the sum of squared real and imaginary entries.

    Non-finite entries yield a non-finite norm; nothing is masked.
    """
    return float(np.sqrt(np.sum(m.re * m.re) + np.sum(m.im * m.im)))


def pinv(w: RealMatrix, tolerance: float | None = None) -> RealMatrix:
    """Moore-Penrose pseudo-inverse of a real matrix via SVD.

    Singular values at or below ``tolerance`` times the largest singular
    value are treated as zero.  The default tolerance is
    ``eps * max(rows, cols)``, the usual SVD cutoff.
    """
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 2:
        raise ShapeError(f"pinv expects a 2-D matrix, got ndim={w.ndim}")
    if tolerance is None:
        tolerance = float(np.finfo(np.float64).eps) * max(w.shape)
    elif tolerance < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tolerance}")
    if not np.isfinite(w).all():
        raise NumericError(
            f"cannot factor a {w.shape[0]}x{w.shape[1]} matrix with "
            f"non-finite entries (nan={int(np.isnan(w).sum())}, "
            f"inf={int(np.isinf(w).sum())})"
        )
    try:
        u, s, vt = np.linalg.svd(w, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(
            f"SVD of {w.shape[0]}x{w.shape[1]} matrix failed: {exc}; "
            f"max|entry|={np.abs(w).max():.3e}"
        ) from exc
    cutoff = tolerance * (s[0] if s.size else 0.0)
    keep = s > cutoff
    s_inv = np.zeros_like(s)
    s_inv[keep] = 1.0 / s[keep]
    return (vt.T * s_inv) @ u.T
