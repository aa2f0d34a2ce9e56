"""Dense complex matrix primitives.

Everything downstream is built on the handful of operations here: adjoints,
products, block assembly, Hermitian eigendecomposition, PSD square roots,
operator absolute values, singular spectra, and the positive-semidefinite
(Loewner) order check.  All functions are pure and treat matrices as
immutable complex128 values.

Matrices entering the system from outside (files, generator specs) are
capped at ``MAX_DIM``; internally assembled block matrices may be up to
twice that size.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_DIM = 64

# Inputs to Hermitian-only operations may deviate from exact Hermitian
# symmetry by this much, relative to max(1, ||M||_F); beyond it they are
# rejected rather than silently symmetrised.
HERMITIAN_RTOL = 1e-12

# Eigenvalues of a nominally PSD matrix within this (relative) band below
# zero are clamped to zero; anything lower means the matrix is not PSD.
PSD_CLAMP_RTOL = 1e-12


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


class NotHermitian(ValueError):
    """An input required to be Hermitian deviates beyond tolerance."""


class NotPSD(ValueError):
    """An input required to be PSD has a significantly negative eigenvalue."""


class NoConvergence(RuntimeError):
    """The eigensolver failed to converge."""


class InvalidMatrix(ValueError):
    """Entries do not form a finite square complex matrix of supported size."""


@dataclass(frozen=True)
class Tolerance:
    """Scale-aware comparison tolerance.

    A quantity at scale ``s`` is compared against
    ``tol_abs + tol_rel * max(1, s)`` so that tiny and large problems are
    treated uniformly.
    """

    tol_abs: float = 1e-12
    tol_rel: float = 1e-9

    def __post_init__(self):
        if not (self.tol_abs >= 0 and self.tol_rel >= 0):
            raise ValueError("tolerances must be nonnegative finite numbers")

    def effective(self, scale: float) -> float:
        return self.tol_abs + self.tol_rel * max(1.0, scale)


DEFAULT_TOL = Tolerance()


def as_matrix(entries, max_dim: int = MAX_DIM) -> np.ndarray:
    """Validate and copy ``entries`` into a square complex128 array.

    Raises InvalidMatrix for non-square / empty / oversized input or any
    non-finite entry.
    """
    try:
        m = np.array(entries, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidMatrix(f"cannot interpret entries as a complex matrix: {exc}") from exc
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidMatrix(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n < 1 or n > max_dim:
        raise InvalidMatrix(f"dimension {n} outside supported range 1..{max_dim}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix has non-finite entries")
    return m


def _square(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {a.shape}")
    return a


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return _square(m).conj().T.copy()


def matmul(a, b) -> np.ndarray:
    """Matrix product of two square matrices of equal dimension."""
    a = _square(a, "left factor")
    b = _square(b, "right factor")
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def direct_sum(a, b) -> np.ndarray:
    """Block-diagonal matrix diag(a, b)."""
    a = _square(a, "first block")
    b = _square(b, "second block")
    na, nb = a.shape[0], b.shape[0]
    out = np.zeros((na + nb, na + nb), dtype=np.complex128)
    out[:na, :na] = a
    out[na:, na:] = b
    return out


def block2(a, b, c, d) -> np.ndarray:
    """2x2 block matrix [[a, b], [c, d]] of equally sized square blocks."""
    blocks = [_square(x, f"block {i}") for i, x in enumerate((a, b, c, d))]
    n = blocks[0].shape[0]
    if any(x.shape[0] != n for x in blocks):
        raise DimensionMismatch("all four blocks must share one dimension")
    out = np.empty((2 * n, 2 * n), dtype=np.complex128)
    out[:n, :n] = blocks[0]
    out[:n, n:] = blocks[1]
    out[n:, :n] = blocks[2]
    out[n:, n:] = blocks[3]
    return out


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(np.asarray(m)))


def hermitian_defect(m) -> float:
    """Frobenius distance from m to exact Hermitian symmetry, ||m - m*||_F."""
    a = _square(m)
    return float(np.linalg.norm(a - a.conj().T))


def hermitian_part(m) -> np.ndarray:
    a = _square(m)
    return (a + a.conj().T) / 2.0


def require_hermitian(m, name: str = "matrix") -> np.ndarray:
    """Return the symmetrised copy of ``m`` or raise NotHermitian if it
    deviates from symmetry beyond round-off."""
    a = _square(m, name)
    defect = float(np.linalg.norm(a - a.conj().T))
    if defect > HERMITIAN_RTOL * max(1.0, float(np.linalg.norm(a))):
        raise NotHermitian(f"{name} is not Hermitian (defect {defect:.3e})")
    return (a + a.conj().T) / 2.0


def _eigvalsh(h: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of an (already symmetrised) Hermitian matrix."""
    try:
        return np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; ``vectors`` holds orthonormal
    eigenvectors as columns, so ``vectors @ diag(eigenvalues) @ vectors*``
    reconstructs the input.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.eigenvalues) @ self.vectors.conj().T

    def apply(self, fn) -> np.ndarray:
        """Apply a real scalar function to the spectrum: V f(w) V*."""
        w = fn(self.eigenvalues)
        out = (self.vectors * w) @ self.vectors.conj().T
        return (out + out.conj().T) / 2.0


def hermitian_eig(m) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    The input may deviate from exact symmetry by round-off (it is
    symmetrised internally); larger defects raise NotHermitian.  The zero
    matrix short-circuits to (zeros, identity).
    """
    h = require_hermitian(m)
    n = h.shape[0]
    if not h.any():
        return SpectralDecomposition(np.zeros(n), np.eye(n, dtype=np.complex128))
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return SpectralDecomposition(w, v.astype(np.complex128, copy=False))


def psd_sqrt(m) -> np.ndarray:
    """Unique PSD square root of a PSD matrix.

    Eigenvalues in a small negative round-off band are clamped to zero;
    genuinely negative spectrum raises NotPSD.
    """
    dec = hermitian_eig(m)
    clamp = PSD_CLAMP_RTOL * max(1.0, frobenius_norm(m))
    w = dec.eigenvalues
    if w[0] < -clamp:
        raise NotPSD(f"matrix has eigenvalue {w[0]:.6e} below -{clamp:.3e}")
    return dec.apply(lambda ev: np.sqrt(np.clip(ev, 0.0, None)))


def abs_op(m) -> np.ndarray:
    """Operator absolute value |m| = (m* m)^(1/2); defined for any square m."""
    a = _square(m)
    gram = a.conj().T @ a
    return psd_sqrt(gram)


@dataclass(frozen=True)
class SingularSpectrum:
    """Singular values in nonincreasing order, with multiplicity."""

    values: tuple[float, ...]

    def __post_init__(self):
        vals = self.values
        if any(v < 0.0 for v in vals):
            raise ValueError("singular values must be nonnegative")
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("singular values must be nonincreasing")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, j):
        return self.values[j]

    @property
    def largest(self) -> float:
        return self.values[0] if self.values else 0.0

    def padded(self, k: int) -> tuple[float, ...]:
        """The spectrum zero-padded to length at least k (never truncated)."""
        if k <= len(self.values):
            return self.values
        return self.values + (0.0,) * (k - len(self.values))

    def scaled(self, factor: float) -> "SingularSpectrum":
        if factor < 0:
            raise ValueError("scale factor must be nonnegative")
        return SingularSpectrum(tuple(factor * v for v in self.values))


def singular_values(m) -> SingularSpectrum:
    """Singular values of a square matrix, from the spectrum of m* m.

    Round-off negatives in the Gram spectrum are clamped before the square
    root, so the result is always a valid nonincreasing nonnegative tuple.
    """
    a = _square(m)
    if not a.any():
        return SingularSpectrum((0.0,) * a.shape[0])
    gram = a.conj().T @ a
    gram = (gram + gram.conj().T) / 2.0
    w = _eigvalsh(gram)
    vals = np.sqrt(np.clip(w[::-1], 0.0, None))
    return SingularSpectrum(tuple(float(v) for v in vals))


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of a Loewner order test X <= Y.

    ``min_eig`` is the smallest eigenvalue of Y - X; the order holds when
    it is above ``-tol_used``.
    """

    holds: bool
    min_eig: float
    tol_used: float


def loewner_leq(x, y, tol: Tolerance = DEFAULT_TOL) -> OrderVerdict:
    """Test X <= Y in the positive-semidefinite order.

    Both operands must be Hermitian (within round-off).  The verdict is
    graded by the smallest eigenvalue of the difference, compared at the
    scale of ||Y - X||_F.
    """
    hx = require_hermitian(x, "left operand")
    hy = require_hermitian(y, "right operand")
    if hx.shape != hy.shape:
        raise DimensionMismatch(f"cannot order {hx.shape} against {hy.shape}")
    diff = hy - hx
    min_eig = float(_eigvalsh(diff)[0]) if diff.any() else 0.0
    tol_used = tol.effective(float(np.linalg.norm(diff)))
    return OrderVerdict(holds=min_eig >= -tol_used, min_eig=min_eig, tol_used=tol_used)
