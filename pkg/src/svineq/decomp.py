"""Operator decompositions and class membership tests.

Two splittings are provided: the Hermitian/skew (real/imaginary part)
splitting A = A1 + i*A2 of an arbitrary square matrix, and the
positive/negative part splitting H = H+ - H- of a Hermitian matrix.
``classify`` reports membership in the Hermitian / PSD / normal /
hyponormal classes together with the graded residuals backing each flag,
so callers can state "hypothesis satisfied to defect eps" instead of a
bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numkernel import (
    DEFAULT_TOL,
    SpectralDecomposition,
    Tolerance,
    _eigvalsh,
    _square,
    abs_op,
    frobenius_norm,
    hermitian_eig,
)


@dataclass(frozen=True)
class CartesianPair:
    """Hermitian matrices a1, a2 with a1 + i*a2 equal to the source matrix."""

    a1: np.ndarray
    a2: np.ndarray

    def recombine(self) -> np.ndarray:
        return self.a1 + 1j * self.a2


def cartesian(a) -> CartesianPair:
    """Split A into Hermitian part (A+A*)/2 and skew part (A-A*)/(2i).

    Both parts are exactly Hermitian (they are re-symmetrised after the
    arithmetic), and a1 + i*a2 reproduces A up to round-off.
    """
    m = _square(a)
    adj = m.conj().T
    a1 = (m + adj) / 2.0
    a1 = (a1 + a1.conj().T) / 2.0
    a2 = (m - adj) / 2j
    a2 = (a2 + a2.conj().T) / 2.0
    return CartesianPair(a1=a1, a2=a2)


@dataclass(frozen=True)
class JordanPair:
    """PSD matrices plus, minus with plus - minus equal to the source and
    plus @ minus = 0."""

    plus: np.ndarray
    minus: np.ndarray

    def recombine(self) -> np.ndarray:
        return self.plus - self.minus


def _halves_from_spectrum(dec: SpectralDecomposition) -> JordanPair:
    plus = dec.apply(lambda w: np.clip(w, 0.0, None))
    minus = dec.apply(lambda w: np.clip(-w, 0.0, None))
    return JordanPair(plus=plus, minus=minus)


def jordan(a) -> JordanPair:
    """Positive/negative part splitting of a Hermitian matrix.

    Computed from the eigendecomposition by clipping the spectrum, which
    makes plus @ minus vanish exactly in exact arithmetic (the parts live
    on orthogonal eigenspaces).  Raises NotHermitian for non-Hermitian
    input.
    """
    return _halves_from_spectrum(hermitian_eig(a))


def jordan_via_abs(a) -> JordanPair:
    """Positive/negative parts through the absolute value: (|A| +- A)/2.

    An independent route to the same pair as ``jordan``; kept separate so
    the two can be cross-checked against each other.
    """
    h = hermitian_eig(a).reconstruct()
    absa = abs_op(h)
    plus = (absa + h) / 2.0
    minus = (absa - h) / 2.0
    return JordanPair(
        plus=(plus + plus.conj().T) / 2.0,
        minus=(minus + minus.conj().T) / 2.0,
    )


def commutator_defect(x, y) -> float:
    """||xy - yx||_F for equally sized square matrices."""
    a = _square(x, "first operand")
    b = _square(y, "second operand")
    return frobenius_norm(a @ b - b @ a)


@dataclass(frozen=True)
class ClassFlags:
    """Operator class membership with the residuals behind each flag.

    - ``hermitian_defect``: ||A - A*||_F, compared at scale ||A||_F.
    - ``min_eigenvalue``: smallest eigenvalue of the Hermitian part of A
      (grades the PSD flag).
    - ``normality_defect``: ||A*A - AA*||_F, compared at scale ||A||_F^2.
    - ``hyponormal_defect``: smallest eigenvalue of A*A - AA* (negative
      values grade the failure of hyponormality).
    """

    hermitian: bool
    psd: bool
    normal: bool
    hyponormal: bool
    hermitian_defect: float
    min_eigenvalue: float
    normality_defect: float
    hyponormal_defect: float


def classify(a, tol: Tolerance = DEFAULT_TOL) -> ClassFlags:
    """Classify a square matrix into the operator classes used by the
    inequality checkers.

    Hermitian-ness and positivity are judged at the scale of ||A||_F;
    normality and hyponormality at ||A||_F^2, since the self-commutator
    is quadratic in A.  The flags are consistent by construction: PSD
    implies Hermitian, and normal implies hyponormal under the same
    tolerance.
    """
    m = _square(a)
    norm = frobenius_norm(m)
    adj = m.conj().T

    herm_defect = float(np.linalg.norm(m - adj))
    herm_tol = tol.effective(norm)
    hermitian = herm_defect <= herm_tol

    hpart = (m + adj) / 2.0
    min_eig = float(_eigvalsh(hpart)[0]) if hpart.any() else 0.0
    psd = hermitian and min_eig >= -herm_tol

    self_comm = adj @ m - m @ adj
    normality = float(np.linalg.norm(self_comm))
    sc_sym = (self_comm + self_comm.conj().T) / 2.0
    hypo_min = float(_eigvalsh(sc_sym)[0]) if sc_sym.any() else 0.0
    sq_tol = tol.effective(norm * norm)
    normal = normality <= sq_tol
    hyponormal = hypo_min >= -sq_tol

    return ClassFlags(
        hermitian=hermitian,
        psd=psd,
        normal=normal,
        hyponormal=hyponormal,
        hermitian_defect=herm_defect,
        min_eigenvalue=min_eig,
        normality_defect=normality,
        hyponormal_defect=hypo_min,
    )
