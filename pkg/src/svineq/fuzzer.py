"""Seeded fuzzing campaigns and randomised counterexample search.

A campaign pairs inequality ids with generator classes and runs a fixed
number of trials per dimension.  Trial ``t`` (numbered globally across
the campaign in deterministic order: targets outermost, then dimensions,
then repetitions) draws its inputs from ``prng_stream(seed, t)``, so the
result is a pure function of the config and independent of execution
order.

Searches target statements that are false (or of unknown truth) in
general: random restarts from an ambient parameterisation that preserves
the statement's hypotheses, followed by greedy entrywise Gaussian
perturbation with step-size halving.  A witness qualifies when its
minimum margin is below ``-10 * tol_used``, well clear of numerical
noise, and every witness replays deterministically through the same
checker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import randgen
from .decomp import cartesian
from .inequalities import (
    CatalogEntry,
    InequalityReport,
    Tolerance,
    UnknownInequality,
    Verdict,
    catalog_entry,
    check,
)
from .numkernel import (
    DEFAULT_TOL,
    DimensionMismatch,
    InvalidMatrix,
    MAX_DIM,
    NotHermitian,
    hermitian_defect,
)
from .inequalities import ArityMismatch


class ConfigInvalid(ValueError):
    """Campaign or search configuration is unusable."""


class MalformedWitness(ValueError):
    """A stored witness cannot be replayed as-is."""


# Classes whose single output is a normal matrix; for checkers flagged
# split_cartesian these are split into their Hermitian/skew parts, which
# yields exactly the commuting Hermitian pairs the statement is about.
_SPLITTABLE_CLASSES = ("normal", "normal_order_constrained")


@dataclass(frozen=True)
class CampaignConfig:
    targets: tuple[tuple[str, str], ...]
    dims: tuple[int, ...]
    trials_per_dim: int
    seed: int
    tol: Tolerance = DEFAULT_TOL
    scale: float = 1.0


@dataclass
class MarginHistogram:
    """Histogram of per-trial minimum margins.

    32 log-spaced bins cover [1e-12, 1e4) at half a decade per bin;
    margins below 1e-12 (including every negative margin) land in the
    underflow bin, margins at or above 1e4 in the overflow bin.
    """

    counts: list[int] = field(default_factory=lambda: [0] * 32)
    underflow: int = 0
    overflow: int = 0

    _LO = -12.0
    _HI = 4.0

    def add(self, margin: float) -> None:
        if margin < 1e-12:
            self.underflow += 1
        elif margin >= 1e4:
            self.overflow += 1
        else:
            width = (self._HI - self._LO) / len(self.counts)
            idx = int((math.log10(margin) - self._LO) / width)
            idx = min(max(idx, 0), len(self.counts) - 1)
            self.counts[idx] += 1

    @property
    def total(self) -> int:
        return sum(self.counts) + self.underflow + self.overflow


@dataclass
class SideStats:
    """Extremes of one margin-side across a target's trials."""

    min_margin: float = math.inf
    max_abs_margin: float = 0.0

    def update(self, side) -> None:
        self.min_margin = min(self.min_margin, side.min_margin)
        extreme = max(abs(e.margin) for e in side.entries) if side.entries else 0.0
        self.max_abs_margin = max(self.max_abs_margin, extreme)


@dataclass(frozen=True)
class Witness:
    """A replayable record of one checked input set."""

    ineq_id: str
    class_tag: str
    dim: int
    seed: int
    trial: int
    tol: Tolerance
    inputs: tuple[np.ndarray, ...]
    report: InequalityReport


@dataclass(frozen=True)
class TargetResult:
    """Aggregated outcome of one (inequality, class) target.

    ``min_margin`` is the worst margin among Violated trials when any
    exist (and then matches ``worst_witness``), otherwise the minimum
    margin over all trials that produced margins; None if no trial did.
    """

    ineq_id: str
    class_tag: str
    dims: tuple[int, ...]
    trials: int
    holds: int
    violated: int
    hypothesis_violated: int
    expected_to_hold: bool
    min_margin: float | None
    histogram: MarginHistogram
    side_stats: dict[str, SideStats]
    worst_witness: Witness | None


@dataclass(frozen=True)
class CampaignResult:
    config: CampaignConfig
    targets: tuple[TargetResult, ...]

    def unexpected_violations(self) -> int:
        return sum(t.violated for t in self.targets if t.expected_to_hold)


def _validate_dims(dims, where: str) -> tuple[int, ...]:
    out = []
    for d in dims:
        if not isinstance(d, (int, np.integer)) or not 1 <= int(d) <= MAX_DIM:
            raise ConfigInvalid(f"{where}: dimension {d!r} outside 1..{MAX_DIM}")
        out.append(int(d))
    if not out:
        raise ConfigInvalid(f"{where}: at least one dimension required")
    return tuple(out)


def _input_plan(entry: CatalogEntry, class_tag: str) -> str:
    """How to turn one generator draw into checker inputs.

    Returns "split" (draw one normal matrix, use its Hermitian/skew
    parts), "native" (the class emits the checker's arity directly), or
    "repeat" (draw a 1-matrix class ``arity`` times).
    """
    if class_tag not in randgen.CLASS_ARITY:
        raise ConfigInvalid(f"unknown generator class {class_tag!r}")
    if entry.split_cartesian and class_tag in _SPLITTABLE_CLASSES:
        return "split"
    class_arity = randgen.CLASS_ARITY[class_tag]
    if class_arity == entry.arity:
        return "native"
    if class_arity == 1:
        return "repeat"
    raise ConfigInvalid(
        f"class {class_tag!r} produces {class_arity} matrices but "
        f"{entry.ineq_id} takes {entry.arity}"
    )


def _build_inputs(
    entry: CatalogEntry, class_tag: str, plan: str, dim: int, stream, scale: float
) -> tuple[np.ndarray, ...]:
    if plan == "split":
        (m,) = randgen.sample(class_tag, dim, stream, scale)
        parts = cartesian(m)
        return (parts.a1, parts.a2)
    if plan == "native":
        return randgen.sample(class_tag, dim, stream, scale)
    mats = []
    for _ in range(entry.arity):
        mats.extend(randgen.sample(class_tag, dim, stream, scale))
    return tuple(mats)


def _plan(config: CampaignConfig) -> list[tuple[CatalogEntry, str, str, tuple[int, ...]]]:
    if not config.targets:
        raise ConfigInvalid("campaign has no targets")
    if not isinstance(config.trials_per_dim, (int, np.integer)) or config.trials_per_dim < 1:
        raise ConfigInvalid(f"trials_per_dim must be >= 1, got {config.trials_per_dim!r}")
    if not isinstance(config.seed, (int, np.integer)) or not 0 <= config.seed < 2**64:
        raise ConfigInvalid(f"seed must be an unsigned 64-bit integer, got {config.seed!r}")
    if not isinstance(config.tol, Tolerance):
        raise ConfigInvalid("tol must be a Tolerance")
    if not (isinstance(config.scale, (int, float)) and math.isfinite(config.scale) and config.scale > 0):
        raise ConfigInvalid(f"scale must be a positive finite real, got {config.scale!r}")
    dims = _validate_dims(config.dims, "dims")
    jobs = []
    for item in config.targets:
        try:
            ineq_id, class_tag = item
        except (TypeError, ValueError):
            raise ConfigInvalid(f"target {item!r} is not an (inequality, class) pair") from None
        try:
            entry = catalog_entry(ineq_id)
        except UnknownInequality as exc:
            raise ConfigInvalid(str(exc)) from None
        plan = _input_plan(entry, class_tag)
        effective_dims = (entry.fixed_dim,) if entry.fixed_dim is not None else dims
        jobs.append((entry, class_tag, plan, effective_dims))
    return jobs


class _TargetAggregator:
    def __init__(self, entry: CatalogEntry, class_tag: str, dims: tuple[int, ...]):
        self.entry = entry
        self.class_tag = class_tag
        self.dims = dims
        self.trials = 0
        self.counts = {Verdict.HOLDS: 0, Verdict.VIOLATED: 0, Verdict.HYPOTHESIS_VIOLATED: 0}
        self.histogram = MarginHistogram()
        self.side_stats: dict[str, SideStats] = {}
        self.margin_floor = math.inf
        self.saw_margins = False
        self.worst_violation = math.inf
        self.worst_witness: Witness | None = None

    def add(self, trial: int, dim: int, seed: int, tol: Tolerance, mats, report: InequalityReport):
        self.trials += 1
        self.counts[report.verdict] += 1
        if report.sides:
            self.saw_margins = True
            self.margin_floor = min(self.margin_floor, report.min_margin)
            self.histogram.add(report.min_margin)
            for side in report.sides:
                self.side_stats.setdefault(side.label, SideStats()).update(side)
        if report.verdict is Verdict.VIOLATED and report.min_margin < self.worst_violation:
            self.worst_violation = report.min_margin
            self.worst_witness = Witness(
                ineq_id=self.entry.ineq_id,
                class_tag=self.class_tag,
                dim=dim,
                seed=seed,
                trial=trial,
                tol=tol,
                inputs=tuple(mats),
                report=report,
            )

    def finish(self) -> TargetResult:
        violated = self.counts[Verdict.VIOLATED]
        if violated:
            min_margin = self.worst_violation
        elif self.saw_margins:
            min_margin = self.margin_floor
        else:
            min_margin = None
        return TargetResult(
            ineq_id=self.entry.ineq_id,
            class_tag=self.class_tag,
            dims=self.dims,
            trials=self.trials,
            holds=self.counts[Verdict.HOLDS],
            violated=violated,
            hypothesis_violated=self.counts[Verdict.HYPOTHESIS_VIOLATED],
            expected_to_hold=self.entry.expected_to_hold(self.class_tag),
            min_margin=min_margin,
            histogram=self.histogram,
            side_stats=self.side_stats,
            worst_witness=self.worst_witness,
        )


def _structural_hypothesis_report(entry, mats, tol: Tolerance) -> InequalityReport:
    """Stand-in report for checkers that reject an input structurally.

    Checkers whose statement needs a Hermitian operand raise NotHermitian
    instead of grading; campaigns count such trials as hypothesis
    violations so generator defects remain visible.
    """
    residuals = {"hermitian_defect": max(hermitian_defect(m) for m in mats)}
    return InequalityReport(
        ineq_id=entry.ineq_id,
        dims=tuple(m.shape[0] for m in mats),
        verdict=Verdict.HYPOTHESIS_VIOLATED,
        min_margin=None,
        tol_used=tol.effective(1.0),
        sides=(),
        skipped=("all",),
        hypothesis_residuals=residuals,
    )


def run_campaign(config: CampaignConfig) -> CampaignResult:
    """Run every target of ``config`` and aggregate margins and verdicts."""
    jobs = _plan(config)
    results = []
    trial = 0
    for entry, class_tag, plan, dims in jobs:
        agg = _TargetAggregator(entry, class_tag, dims)
        for dim in dims:
            for _ in range(config.trials_per_dim):
                stream = randgen.prng_stream(config.seed, trial)
                mats = _build_inputs(entry, class_tag, plan, dim, stream, config.scale)
                try:
                    report = check(entry.ineq_id, mats, config.tol)
                except NotHermitian:
                    report = _structural_hypothesis_report(entry, mats, config.tol)
                agg.add(trial, dim, config.seed, config.tol, mats, report)
                trial += 1
        results.append(agg.finish())
    return CampaignResult(config=config, targets=tuple(results))


# --- counterexample search ---------------------------------------------------

SEARCH_TARGET_IDS = (
    "bk-1.1-hermitian-B",
    "thm-2.1-nonnormal",
    "loewner-cartesian-general",
)

_DEFAULT_SEARCH_DIMS = {
    "bk-1.1-hermitian-B": (2, 3),
    "thm-2.1-nonnormal": (2, 3),
    "loewner-cartesian-general": (2,),
}


@dataclass(frozen=True)
class SearchTarget:
    """A statement to search for counterexamples of.

    ``budget`` counts random restarts; each restart runs up to
    ``perturb_steps`` greedy perturbation steps.
    """

    target_id: str
    budget: int
    perturb_steps: int = 64
    dims: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.target_id not in SEARCH_TARGET_IDS:
            raise ConfigInvalid(
                f"unknown search target {self.target_id!r}; known: {SEARCH_TARGET_IDS}"
            )
        if not isinstance(self.budget, (int, np.integer)) or self.budget < 0:
            raise ConfigInvalid(f"budget must be >= 0, got {self.budget!r}")
        if not isinstance(self.perturb_steps, (int, np.integer)) or self.perturb_steps < 0:
            raise ConfigInvalid(f"perturb_steps must be >= 0, got {self.perturb_steps!r}")
        if self.dims is not None:
            object.__setattr__(self, "dims", _validate_dims(self.dims, "search dims"))


def _complex_square(params: np.ndarray, n: int) -> np.ndarray:
    return (params[: n * n] + 1j * params[n * n :]).reshape(n, n)


def _search_param_length(target_id: str, n: int) -> int:
    if target_id == "bk-1.1-hermitian-B":
        return 4 * n * n
    return 2 * n * n


def _search_build(target_id: str, params: np.ndarray, n: int) -> tuple[np.ndarray, ...]:
    """Map a flat real parameter vector to checker inputs.

    The parameterisation preserves the target's hypotheses under
    perturbation: for the relaxed bk comparison, A = G*G stays PSD and
    B = (H+H*)/2 stays Hermitian for any G, H.
    """
    if target_id == "bk-1.1-hermitian-B":
        g = _complex_square(params[: 2 * n * n], n)
        h = _complex_square(params[2 * n * n :], n)
        a = g.conj().T @ g
        return ((a + a.conj().T) / 2.0, (h + h.conj().T) / 2.0)
    return (_complex_square(params, n),)


def search_counterexample(target: SearchTarget, seed: int) -> Witness | None:
    """Search for a robust violation of ``target``; None means exhausted.

    Restart ``r`` draws from ``prng_stream(seed, r)`` and cycles through
    the target's dimensions, so the search is a pure function of
    (target, seed).
    """
    if not isinstance(seed, (int, np.integer)) or not 0 <= seed < 2**64:
        raise ConfigInvalid(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    dims = target.dims or _DEFAULT_SEARCH_DIMS[target.target_id]
    tol = DEFAULT_TOL

    def qualifying(report: InequalityReport) -> bool:
        return report.min_margin is not None and report.min_margin < -10.0 * report.tol_used

    for restart in range(target.budget):
        stream = randgen.prng_stream(seed, restart)
        n = dims[restart % len(dims)]
        length = _search_param_length(target.target_id, n)
        params = stream.normals(length)
        best_mats = _search_build(target.target_id, params, n)
        best = check(target.target_id, best_mats, tol)
        found_mats, found = (best_mats, best) if qualifying(best) else (None, None)
        if found is None:
            sigma = 0.5
            for _ in range(target.perturb_steps):
                candidate = params + sigma * stream.normals(length)
                mats = _search_build(target.target_id, candidate, n)
                report = check(target.target_id, mats, tol)
                if qualifying(report):
                    found_mats, found = mats, report
                    break
                if report.min_margin < best.min_margin:
                    params, best = candidate, report
                else:
                    sigma *= 0.5
        if found is not None:
            return Witness(
                ineq_id=target.target_id,
                class_tag=f"search:{target.target_id}",
                dim=n,
                seed=seed,
                trial=restart,
                tol=tol,
                inputs=found_mats,
                report=found,
            )
    return None


def replay(witness: Witness) -> InequalityReport:
    """Re-run the stored checker on the stored inputs.

    Raises MalformedWitness when the witness cannot be interpreted
    (unknown id, wrong arity, inconsistent dimensions, non-finite
    entries).
    """
    try:
        catalog_entry(witness.ineq_id)
    except UnknownInequality as exc:
        raise MalformedWitness(str(exc)) from None
    for m in witness.inputs:
        arr = np.asarray(m)
        if not np.all(np.isfinite(arr)):
            raise MalformedWitness("witness inputs contain non-finite entries")
    try:
        return check(witness.ineq_id, witness.inputs, witness.tol)
    except (ArityMismatch, DimensionMismatch, InvalidMatrix) as exc:
        raise MalformedWitness(str(exc)) from None
