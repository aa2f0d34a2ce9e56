"""Checker catalog for singular-value and operator-order inequalities.

Every checker compares one or two "sides" and returns an
:class:`InequalityReport` holding the complete per-index margin data, the
graded hypothesis residuals, and a three-way verdict:

- ``holds``: every margin is above ``-tol_used``;
- ``violated``: some margin is genuinely negative;
- ``hypothesis_violated``: the statement's hypotheses fail on this input
  (e.g. an operand that must be PSD is not), in which case the margins are
  still computed and reported — they are data, not errors.

Structural requirements (an operand that must be Hermitian for the
statement to even parse) raise ``NotHermitian`` instead of grading into a
verdict.

Two comparison kinds appear.  Spectrum sides compare singular values
zero-padded to a common length with ``margin_j = rhs_j - lhs_j``.  Order
sides test a Loewner inequality ``X <= Y``; their per-index entries are
the ascending eigenvalues of ``Y - X`` (so ``j = 1`` is the decisive one)
with ``lhs = 0``.

The effective tolerance of a report is
``tol_abs + tol_rel * max(1, scale)`` where ``scale`` is the largest
leading singular value (spectrum sides) or difference norm (order sides)
over all sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .decomp import cartesian, classify, commutator_defect, jordan
from .numkernel import (
    DEFAULT_TOL,
    DimensionMismatch,
    Tolerance,
    _eigvalsh,
    _square,
    abs_op,
    adjoint,
    block2,
    direct_sum,
    frobenius_norm,
    hermitian_part,
    loewner_leq,
    psd_sqrt,
    require_hermitian,
    singular_values,
)

_INV_SQRT2 = 2.0 ** -0.5
_SQRT2 = math.sqrt(2.0)


class UnknownInequality(ValueError):
    """The requested inequality id is not in the catalog."""


class ArityMismatch(ValueError):
    """Wrong number of input matrices for the requested inequality."""


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    HYPOTHESIS_VIOLATED = "hypothesis_violated"


@dataclass(frozen=True)
class IndexMargin:
    """One per-index comparison: margin = rhs - lhs, negative means failure."""

    j: int
    lhs: float
    rhs: float
    margin: float


@dataclass(frozen=True)
class MarginSide:
    """One side of an inequality: a full margin list plus its scale.

    ``kind`` is "spectrum" for singular-value comparisons and "order" for
    Loewner comparisons.  ``scale`` feeds the report tolerance: the larger
    head value for spectra, the Frobenius norm of the difference for
    orders.
    """

    label: str
    kind: str
    entries: tuple[IndexMargin, ...]
    scale: float
    min_margin: float


@dataclass(frozen=True)
class InequalityReport:
    """Structured outcome of one inequality check."""

    ineq_id: str
    dims: tuple[int, ...]
    verdict: Verdict
    min_margin: float | None
    tol_used: float
    sides: tuple[MarginSide, ...]
    skipped: tuple[str, ...] = ()
    hypothesis_residuals: dict[str, float] = field(default_factory=dict)

    def side(self, label: str) -> MarginSide:
        for s in self.sides:
            if s.label == label:
                return s
        raise KeyError(label)


def _as_values(spectrum_or_values) -> tuple[float, ...]:
    values = getattr(spectrum_or_values, "values", spectrum_or_values)
    return tuple(float(v) for v in values)


def _spectrum_side(label: str, lhs, rhs) -> MarginSide:
    lv, rv = _as_values(lhs), _as_values(rhs)
    k = max(len(lv), len(rv))
    lv = lv + (0.0,) * (k - len(lv))
    rv = rv + (0.0,) * (k - len(rv))
    entries = tuple(
        IndexMargin(j=i + 1, lhs=lv[i], rhs=rv[i], margin=rv[i] - lv[i]) for i in range(k)
    )
    scale = max(lv[0], rv[0]) if k else 0.0
    return MarginSide(
        label=label,
        kind="spectrum",
        entries=entries,
        scale=scale,
        min_margin=min(e.margin for e in entries),
    )


def _order_side(label: str, x, y) -> MarginSide:
    """Loewner side X <= Y, graded by the ascending spectrum of Y - X."""
    xs = hermitian_part(x)
    ys = hermitian_part(y)
    diff = ys - xs
    if diff.any():
        eigs = _eigvalsh(diff)
    else:
        eigs = np.zeros(diff.shape[0])
    entries = tuple(
        IndexMargin(j=i + 1, lhs=0.0, rhs=float(w), margin=float(w)) for i, w in enumerate(eigs)
    )
    return MarginSide(
        label=label,
        kind="order",
        entries=entries,
        scale=float(np.linalg.norm(diff)),
        min_margin=entries[0].margin,
    )


def _finalize(
    ineq_id: str,
    dims: tuple[int, ...],
    sides: Sequence[MarginSide],
    tol: Tolerance,
    hypothesis_ok: bool = True,
    residuals: dict[str, float] | None = None,
    skipped: tuple[str, ...] = (),
) -> InequalityReport:
    sides = tuple(sides)
    scale = max((s.scale for s in sides), default=0.0)
    tol_used = tol.effective(scale)
    min_margin = min((s.min_margin for s in sides), default=None)
    if not hypothesis_ok:
        verdict = Verdict.HYPOTHESIS_VIOLATED
    elif min_margin is not None and min_margin < -tol_used:
        verdict = Verdict.VIOLATED
    else:
        verdict = Verdict.HOLDS
    return InequalityReport(
        ineq_id=ineq_id,
        dims=dims,
        verdict=verdict,
        min_margin=min_margin,
        tol_used=tol_used,
        sides=sides,
        skipped=skipped,
        hypothesis_residuals=dict(residuals or {}),
    )


def _psd_residuals(prefix: str, flags) -> dict[str, float]:
    return {
        f"{prefix}_hermitian_defect": flags.hermitian_defect,
        f"{prefix}_min_eigenvalue": flags.min_eigenvalue,
    }


def _same_dims(mats: Sequence[np.ndarray]) -> int:
    n = mats[0].shape[0]
    for m in mats[1:]:
        if m.shape[0] != n:
            raise DimensionMismatch(
                f"all inputs must share one dimension, got {[m.shape[0] for m in mats]}"
            )
    return n


# --- scalar inequality -----------------------------------------------------


def check_scalar_1_6(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """(1/sqrt2)|a+b| <= |a+ib| <= |a|+|b| for real scalars a, b."""
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("inputs must be finite")
    mod = math.sqrt(a * a + b * b)
    left = _spectrum_side("left", (_INV_SQRT2 * abs(a + b),), (mod,))
    right = _spectrum_side("right", (mod,), (abs(a) + abs(b),))
    return _finalize("scalar-1.6", (1, 1), (left, right), tol)


# --- two-operand singular value inequalities -------------------------------


def check_bk_1_1(a, b, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """s_j(A+B) <= sqrt2 * s_j(A+iB) for PSD A, B."""
    a, b = _square(a, "A"), _square(b, "B")
    n = _same_dims((a, b))
    fa, fb = classify(a, tol), classify(b, tol)
    residuals = {**_psd_residuals("a", fa), **_psd_residuals("b", fb)}
    lhs = singular_values(a + b)
    rhs = tuple(_SQRT2 * v for v in singular_values(a + 1j * b).values)
    side = _spectrum_side("main", lhs, rhs)
    return _finalize(
        "bk-1.1", (n, n), (side,), tol, hypothesis_ok=fa.psd and fb.psd, residuals=residuals
    )


def _bk_margin_side(a, b):
    lhs = singular_values(a + b)
    rhs = tuple(_SQRT2 * v for v in singular_values(a + 1j * b).values)
    return _spectrum_side("main", lhs, rhs)


def check_bk_1_1_hermitian_b(a, b, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """The bk-1.1 comparison with B only required Hermitian, not PSD.

    This relaxed statement is false in general; it exists as a search and
    replay target for counterexamples.
    """
    a, b = _square(a, "A"), _square(b, "B")
    n = _same_dims((a, b))
    fa, fb = classify(a, tol), classify(b, tol)
    residuals = {
        **_psd_residuals("a", fa),
        "b_hermitian_defect": fb.hermitian_defect,
    }
    side = _bk_margin_side(a, b)
    return _finalize(
        "bk-1.1-hermitian-B",
        (n, n),
        (side,),
        tol,
        hypothesis_ok=fa.psd and fb.hermitian,
        residuals=residuals,
    )


def check_tao_1_2(a, b, c, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """2 s_j(B) <= s_j([[A,B],[B*,C]]) when the block matrix is PSD."""
    a, b, c = _square(a, "A"), _square(b, "B"), _square(c, "C")
    n = _same_dims((a, b, c))
    block = block2(a, b, adjoint(b), c)
    fx = classify(block, tol)
    residuals = {
        "block_hermitian_defect": fx.hermitian_defect,
        "block_min_eigenvalue": fx.min_eigenvalue,
    }
    lhs = tuple(2.0 * v for v in singular_values(b).values)
    side = _spectrum_side("main", lhs, singular_values(block))
    return _finalize("tao-1.2", (n, n, n), (side,), tol, hypothesis_ok=fx.psd, residuals=residuals)


def check_ak_1_3(a, b, c, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """s_j(B) <= s_j(A ⊕ C) when [[A,B],[B*,C]] is PSD."""
    a, b, c = _square(a, "A"), _square(b, "B"), _square(c, "C")
    n = _same_dims((a, b, c))
    block = block2(a, b, adjoint(b), c)
    fx = classify(block, tol)
    residuals = {
        "block_hermitian_defect": fx.hermitian_defect,
        "block_min_eigenvalue": fx.min_eigenvalue,
    }
    side = _spectrum_side("main", singular_values(b), singular_values(direct_sum(a, c)))
    return _finalize("ak-1.3", (n, n, n), (side,), tol, hypothesis_ok=fx.psd, residuals=residuals)


def check_ak_1_4(a, b, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """2 s_j(A) <= s_j((B+A) ⊕ (B-A)) for Hermitian A with ±A <= B."""
    a, b = _square(a, "A"), _square(b, "B")
    n = _same_dims((a, b))
    fa, fb = classify(a, tol), classify(b, tol)
    ha, hb = hermitian_part(a), hermitian_part(b)
    order_minus = loewner_leq(ha, hb, tol)
    order_plus = loewner_leq(-ha, hb, tol)
    residuals = {
        "a_hermitian_defect": fa.hermitian_defect,
        "b_hermitian_defect": fb.hermitian_defect,
        "b_min_eigenvalue": fb.min_eigenvalue,
        "min_eig_b_minus_a": order_minus.min_eig,
        "min_eig_b_plus_a": order_plus.min_eig,
    }
    hyp = fa.hermitian and fb.psd and order_minus.holds and order_plus.holds
    lhs = tuple(2.0 * v for v in singular_values(a).values)
    side = _spectrum_side("main", lhs, singular_values(direct_sum(b + a, b - a)))
    return _finalize("ak-1.4", (n, n), (side,), tol, hypothesis_ok=hyp, residuals=residuals)


# --- one-operand theorems on the Hermitian/skew splitting -------------------


def _thm_2_1_sides(a) -> tuple[MarginSide, MarginSide]:
    parts = cartesian(a)
    mid = singular_values(a)
    left_lhs = tuple(_INV_SQRT2 * v for v in singular_values(parts.a1 + parts.a2).values)
    left = _spectrum_side("left", left_lhs, mid)
    right = _spectrum_side(
        "right", mid, singular_values(abs_op(parts.a1) + abs_op(parts.a2))
    )
    return left, right


def check_thm_2_1(a, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """(1/sqrt2) s_j(A1+A2) <= s_j(A) <= s_j(|A1|+|A2|) for normal A."""
    a = _square(a, "A")
    fa = classify(a, tol)
    left, right = _thm_2_1_sides(a)
    return _finalize(
        "thm-2.1",
        (a.shape[0],),
        (left, right),
        tol,
        hypothesis_ok=fa.normal,
        residuals={"normality_defect": fa.normality_defect},
    )


def check_thm_2_1_nonnormal(a, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """The thm-2.1 comparison with the normality hypothesis dropped.

    Exists as a search/replay target: violations demonstrate that the
    hypothesis is essential.
    """
    a = _square(a, "A")
    fa = classify(a, tol)
    left, right = _thm_2_1_sides(a)
    return _finalize(
        "thm-2.1-nonnormal",
        (a.shape[0],),
        (left, right),
        tol,
        residuals={"normality_defect": fa.normality_defect},
    )


def check_thm_2_4(a, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """s_j(A) <= s_j(2(A1⁺+A2⁺) ⊕ (A1+A2)) for normal A with -A2 <= A1."""
    a = _square(a, "A")
    fa = classify(a, tol)
    parts = cartesian(a)
    order = loewner_leq(-parts.a2, parts.a1, tol)
    residuals = {
        "normality_defect": fa.normality_defect,
        "min_eig_a1_plus_a2": order.min_eig,
    }
    jp1 = jordan(parts.a1)
    jp2 = jordan(parts.a2)
    rhs_mat = direct_sum(2.0 * (jp1.plus + jp2.plus), parts.a1 + parts.a2)
    side = _spectrum_side("main", singular_values(a), singular_values(rhs_mat))
    return _finalize(
        "thm-2.4",
        (a.shape[0],),
        (side,),
        tol,
        hypothesis_ok=fa.normal and order.holds,
        residuals=residuals,
    )


def check_thm_2_5(a, side: str, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """s_j(A±) <= s_j(|A| ⊕ (|A|∓A)/2) for Hermitian A.

    ``side`` selects the positive ("plus") or negative ("minus") part.
    Raises NotHermitian for non-Hermitian input: the positive/negative
    splitting is undefined otherwise.
    """
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    h = require_hermitian(a, "A")
    jp = jordan(h)
    absa = abs_op(h)
    if side == "plus":
        lhs = singular_values(jp.plus)
        rest = (absa - h) / 2.0
    else:
        lhs = singular_values(jp.minus)
        rest = (absa + h) / 2.0
    margin_side = _spectrum_side("main", lhs, singular_values(direct_sum(absa, rest)))
    return _finalize(f"thm-2.5-{side}", (h.shape[0],), (margin_side,), tol)


def check_thm_2_7(a, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """sqrt2 s_j(A1+A2) <= s_j(A+iA*) <= 2 s_j(A1+A2) for arbitrary A.

    The left comparison is an exact identity (A + iA* = (1+i)(A1+A2)), so
    its margins are round-off sized on every input.
    """
    a = _square(a, "A")
    parts = cartesian(a)
    s_sum = singular_values(parts.a1 + parts.a2).values
    t = singular_values(a + 1j * adjoint(a))
    left = _spectrum_side("left", tuple(_SQRT2 * v for v in s_sum), t)
    right = _spectrum_side("right", t, tuple(2.0 * v for v in s_sum))
    return _finalize("thm-2.7", (a.shape[0],), (left, right), tol)


def check_thm_2_8(a, b, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """s_j(AB+BA) <= s_j((A*A+B*B) ⊕ (AA*+BB*)) for arbitrary A, B."""
    a, b = _square(a, "A"), _square(b, "B")
    n = _same_dims((a, b))
    lhs = singular_values(a @ b + b @ a)
    gram_right = adjoint(a) @ a + adjoint(b) @ b
    gram_left = a @ adjoint(a) + b @ adjoint(b)
    side = _spectrum_side("main", lhs, singular_values(direct_sum(gram_right, gram_left)))
    return _finalize("thm-2.8", (n, n), (side,), tol)


def check_cor_2_9(a, b, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """s_j(AB+BA) <= s_j((AA*+BB*) ⊕ (AA*+BB*)) for normal A, B."""
    a, b = _square(a, "A"), _square(b, "B")
    n = _same_dims((a, b))
    fa, fb = classify(a, tol), classify(b, tol)
    residuals = {
        "a_normality_defect": fa.normality_defect,
        "b_normality_defect": fb.normality_defect,
    }
    gram = a @ adjoint(a) + b @ adjoint(b)
    lhs = singular_values(a @ b + b @ a)
    side = _spectrum_side("main", lhs, singular_values(direct_sum(gram, gram)))
    return _finalize(
        "cor-2.9",
        (n, n),
        (side,),
        tol,
        hypothesis_ok=fa.normal and fb.normal,
        residuals=residuals,
    )


# --- order-form checkers ----------------------------------------------------


def _loewner_cartesian(a, tol: Tolerance, ineq_id: str) -> InequalityReport:
    a = _square(a, "A")
    parts = cartesian(a)
    absa = abs_op(a)
    left = _order_side("left", _INV_SQRT2 * abs_op(parts.a1 + parts.a2), absa)
    right = _order_side("right", absa, abs_op(parts.a1) + abs_op(parts.a2))
    return _finalize(ineq_id, (a.shape[0],), (left, right), tol)


def check_loewner_cartesian(a, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """The matrix-order analogue of thm-2.1:
    (1/sqrt2)|A1+A2| <= |A| and |A| <= |A1|+|A2| in the Loewner order.

    Both can fail even though the singular-value versions hold for normal
    A; failures are reported as Violated verdicts, not errors, because
    they are the interesting output.
    """
    return _loewner_cartesian(a, tol, "loewner-cartesian")


def check_loewner_cartesian_general(a, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """Identical comparison to loewner-cartesian under its search-target id."""
    return _loewner_cartesian(a, tol, "loewner-cartesian-general")


def _proof_facts(a1, a2, tol: Tolerance, ineq_id: str, gate_sqrt: bool) -> InequalityReport:
    h1 = require_hermitian(a1, "A1")
    h2 = require_hermitian(a2, "A2")
    n = _same_dims((h1, h2))
    comm = commutator_defect(h1, h2)
    commuting = comm <= tol.effective(frobenius_norm(h1) * frobenius_norm(h2))
    s = h1 + h2
    sides = [_order_side("square", s @ s, 2.0 * (h1 @ h1 + h2 @ h2))]
    skipped: tuple[str, ...] = ()
    if commuting or not gate_sqrt:
        sq_sum = hermitian_part(h1 @ h1 + h2 @ h2)
        sides.append(_order_side("sqrt", psd_sqrt(sq_sum), abs_op(h1) + abs_op(h2)))
    else:
        skipped = ("sqrt",)
    return _finalize(
        ineq_id,
        (n, n),
        sides,
        tol,
        residuals={"commutator_defect": comm},
        skipped=skipped,
    )


def check_proof_facts_2_1(a1, a2, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """Two operator-order facts about a Hermitian pair:
    (A1+A2)^2 <= 2(A1^2+A2^2), always; and sqrt(A1^2+A2^2) <= |A1|+|A2|,
    checked only when the pair commutes (the side is skipped otherwise).
    """
    return _proof_facts(a1, a2, tol, "proof-facts-2.1", gate_sqrt=True)


def check_proof_facts_2_1_general(a1, a2, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """Both proof-facts comparisons on an arbitrary Hermitian pair.

    The square-root comparison is evaluated even for non-commuting pairs;
    its general validity is treated as an open question to fuzz, so this
    id is never expected to hold a priori.
    """
    return _proof_facts(a1, a2, tol, "proof-facts-2.1-general", gate_sqrt=False)


# --- catalog and uniform dispatch -------------------------------------------

# Generator classes whose outputs are always normal matrices; used to decide
# which (inequality, class) pairings are expected to hold.
NORMAL_OUTPUT_CLASSES = frozenset(
    {"hermitian", "psd", "unitary", "normal", "normal_order_constrained"}
)


@dataclass(frozen=True)
class CatalogEntry:
    """Dispatch record for one inequality id.

    ``holds_for`` is the set of generator class tags for which a Violated
    verdict would indicate a bug (None means every class: the statement is
    a theorem whose hypotheses are graded by the checker itself).
    ``split_cartesian`` marks checkers whose canonical two-matrix input is
    the Hermitian/skew splitting of a single generated matrix.
    """

    ineq_id: str
    arity: int
    canonical_class: str
    runner: Callable[..., InequalityReport]
    fixed_dim: int | None = None
    in_all: bool = True
    split_cartesian: bool = False
    holds_for: frozenset[str] | None = None

    def expected_to_hold(self, class_tag: str) -> bool:
        if self.holds_for is None:
            return True
        return class_tag in self.holds_for


def _run_scalar(mats, tol):
    reals = []
    for m in mats:
        z = complex(m[0, 0])
        if abs(z.imag) > 1e-12 * max(1.0, abs(z)):
            raise ValueError("scalar-1.6 takes real scalars; imaginary part is not negligible")
        reals.append(z.real)
    return check_scalar_1_6(reals[0], reals[1], tol)


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    CATALOG[entry.ineq_id] = entry


_register(CatalogEntry("scalar-1.6", 2, "hermitian", _run_scalar, fixed_dim=1))
_register(CatalogEntry("bk-1.1", 2, "psd", lambda m, t: check_bk_1_1(m[0], m[1], t)))
_register(
    CatalogEntry("tao-1.2", 3, "psd_block2", lambda m, t: check_tao_1_2(m[0], m[1], m[2], t))
)
_register(
    CatalogEntry("ak-1.3", 3, "psd_block2", lambda m, t: check_ak_1_3(m[0], m[1], m[2], t))
)
_register(
    CatalogEntry("ak-1.4", 2, "dominated_pair", lambda m, t: check_ak_1_4(m[0], m[1], t))
)
_register(CatalogEntry("thm-2.1", 1, "normal", lambda m, t: check_thm_2_1(m[0], t)))
_register(
    CatalogEntry(
        "thm-2.4", 1, "normal_order_constrained", lambda m, t: check_thm_2_4(m[0], t)
    )
)
_register(
    CatalogEntry("thm-2.5-plus", 1, "hermitian", lambda m, t: check_thm_2_5(m[0], "plus", t))
)
_register(
    CatalogEntry("thm-2.5-minus", 1, "hermitian", lambda m, t: check_thm_2_5(m[0], "minus", t))
)
_register(CatalogEntry("thm-2.7", 1, "ginibre", lambda m, t: check_thm_2_7(m[0], t)))
_register(CatalogEntry("thm-2.8", 2, "ginibre", lambda m, t: check_thm_2_8(m[0], m[1], t)))
_register(
    CatalogEntry(
        "cor-2.9", 2, "normal_pair_shared_basis", lambda m, t: check_cor_2_9(m[0], m[1], t)
    )
)
_register(
    CatalogEntry(
        "loewner-cartesian",
        1,
        "normal",
        lambda m, t: check_loewner_cartesian(m[0], t),
        holds_for=NORMAL_OUTPUT_CLASSES,
    )
)
_register(
    CatalogEntry(
        "proof-facts-2.1",
        2,
        "normal",
        lambda m, t: check_proof_facts_2_1(m[0], m[1], t),
        split_cartesian=True,
    )
)
# Search/replay variants: statements known or suspected to be false in
# general.  Excluded from the "all" expansion.
_register(
    CatalogEntry(
        "bk-1.1-hermitian-B",
        2,
        "psd",
        lambda m, t: check_bk_1_1_hermitian_b(m[0], m[1], t),
        in_all=False,
        holds_for=frozenset({"psd"}),
    )
)
_register(
    CatalogEntry(
        "thm-2.1-nonnormal",
        1,
        "ginibre",
        lambda m, t: check_thm_2_1_nonnormal(m[0], t),
        in_all=False,
        holds_for=NORMAL_OUTPUT_CLASSES,
    )
)
_register(
    CatalogEntry(
        "loewner-cartesian-general",
        1,
        "ginibre",
        lambda m, t: check_loewner_cartesian_general(m[0], t),
        in_all=False,
        holds_for=NORMAL_OUTPUT_CLASSES,
    )
)
_register(
    CatalogEntry(
        "proof-facts-2.1-general",
        2,
        "hermitian",
        lambda m, t: check_proof_facts_2_1_general(m[0], m[1], t),
        in_all=False,
        split_cartesian=True,
        holds_for=frozenset({"normal", "normal_order_constrained"}),
    )
)


def catalog_ids(include_variants: bool = False) -> tuple[str, ...]:
    """Inequality ids in catalog order; variants are the search-only ids."""
    return tuple(
        e.ineq_id for e in CATALOG.values() if include_variants or e.in_all
    )


def catalog_entry(ineq_id: str) -> CatalogEntry:
    try:
        return CATALOG[ineq_id]
    except KeyError:
        raise UnknownInequality(f"unknown inequality id {ineq_id!r}") from None


def check(ineq_id: str, inputs: Sequence, tol: Tolerance = DEFAULT_TOL) -> InequalityReport:
    """Uniform dispatch: run the checker for ``ineq_id`` on ``inputs``.

    Validates arity and dimensions before delegating; the report's id
    always equals the requested id.
    """
    entry = catalog_entry(ineq_id)
    mats = [np.asarray(m, dtype=np.complex128) for m in inputs]
    if len(mats) != entry.arity:
        raise ArityMismatch(
            f"{ineq_id} takes {entry.arity} input(s), got {len(mats)}"
        )
    for m in mats:
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"inputs must be square matrices, got shape {m.shape}")
    _same_dims(mats)
    if entry.fixed_dim is not None and mats[0].shape[0] != entry.fixed_dim:
        raise DimensionMismatch(
            f"{ineq_id} requires {entry.fixed_dim}x{entry.fixed_dim} inputs"
        )
    return entry.runner(mats, tol)
