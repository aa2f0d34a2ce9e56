"""JSON schemas for matrices, reports, witnesses, and campaign results.

Matrix interchange uses explicit [re, im] pairs — no complex-string
parsing, no NaN/Inf.  Report documents mirror the in-memory dataclasses
field by field and round-trip losslessly (Python's float formatting is
shortest-roundtrip).  Every document carries ``"schema": 1`` and the tool
version.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import __version__
from .fuzzer import (
    CampaignConfig,
    CampaignResult,
    MalformedWitness,
    MarginHistogram,
    SideStats,
    TargetResult,
    Witness,
)
from .inequalities import (
    IndexMargin,
    InequalityReport,
    MarginSide,
    Verdict,
)
from .numkernel import InvalidMatrix, Tolerance, as_matrix

SCHEMA_VERSION = 1


def document(kind: str, body: dict[str, Any]) -> dict[str, Any]:
    doc = {"schema": SCHEMA_VERSION, "tool": "svineq", "version": __version__, "kind": kind}
    doc.update(body)
    return doc


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def dumps_compact(doc: dict[str, Any]) -> str:
    return json.dumps(doc, separators=(",", ":"), allow_nan=False)


def _reject_constant(token: str):
    raise ValueError(f"non-finite JSON token {token!r} is not allowed")


def loads_strict(text: str) -> Any:
    return json.loads(text, parse_constant=_reject_constant)


# --- matrices ----------------------------------------------------------------


def matrix_to_json(m) -> dict[str, Any]:
    a = np.asarray(m, dtype=np.complex128)
    return {
        "n": int(a.shape[0]),
        "entries": [
            [[float(z.real), float(z.imag)] for z in row] for row in a
        ],
    }


def matrix_from_json(doc) -> np.ndarray:
    if not isinstance(doc, dict):
        raise InvalidMatrix("matrix document must be a JSON object")
    if "n" not in doc or "entries" not in doc:
        raise InvalidMatrix('matrix document needs "n" and "entries" fields')
    n = doc["n"]
    entries = doc["entries"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidMatrix('"n" must be an integer')
    if not isinstance(entries, list) or len(entries) != n:
        raise InvalidMatrix(f'"entries" must be a list of {n} rows')
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise InvalidMatrix(f"each row must hold exactly {n} [re, im] pairs")
        values = []
        for pair in row:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
            ):
                raise InvalidMatrix(f"entry {pair!r} is not an [re, im] pair")
            values.append(complex(pair[0], pair[1]))
        rows.append(values)
    return as_matrix(rows)


def parse_matrix_text(text: str) -> np.ndarray:
    try:
        doc = loads_strict(text)
    except ValueError as exc:
        raise InvalidMatrix(f"not valid JSON: {exc}") from exc
    return matrix_from_json(doc)


# --- tolerances and reports --------------------------------------------------


def tolerance_to_json(tol: Tolerance) -> dict[str, float]:
    return {"tol_abs": tol.tol_abs, "tol_rel": tol.tol_rel}


def tolerance_from_json(doc) -> Tolerance:
    return Tolerance(tol_abs=float(doc["tol_abs"]), tol_rel=float(doc["tol_rel"]))


def _side_to_json(side: MarginSide) -> dict[str, Any]:
    return {
        "label": side.label,
        "kind": side.kind,
        "scale": side.scale,
        "min_margin": side.min_margin,
        "per_index": [
            {"j": e.j, "lhs": e.lhs, "rhs": e.rhs, "margin": e.margin} for e in side.entries
        ],
    }


def _side_from_json(doc) -> MarginSide:
    entries = tuple(
        IndexMargin(j=int(e["j"]), lhs=float(e["lhs"]), rhs=float(e["rhs"]), margin=float(e["margin"]))
        for e in doc["per_index"]
    )
    return MarginSide(
        label=doc["label"],
        kind=doc["kind"],
        entries=entries,
        scale=float(doc["scale"]),
        min_margin=float(doc["min_margin"]),
    )


def report_to_json(report: InequalityReport) -> dict[str, Any]:
    return {
        "id": report.ineq_id,
        "dims": list(report.dims),
        "verdict": report.verdict.value,
        "min_margin": report.min_margin,
        "tol_used": report.tol_used,
        "hypothesis_residuals": dict(report.hypothesis_residuals),
        "skipped": list(report.skipped),
        "sides": [_side_to_json(s) for s in report.sides],
    }


def report_from_json(doc) -> InequalityReport:
    return InequalityReport(
        ineq_id=doc["id"],
        dims=tuple(int(d) for d in doc["dims"]),
        verdict=Verdict(doc["verdict"]),
        min_margin=None if doc["min_margin"] is None else float(doc["min_margin"]),
        tol_used=float(doc["tol_used"]),
        sides=tuple(_side_from_json(s) for s in doc["sides"]),
        skipped=tuple(doc["skipped"]),
        hypothesis_residuals={k: float(v) for k, v in doc["hypothesis_residuals"].items()},
    )


# --- witnesses ---------------------------------------------------------------


def witness_to_json(witness: Witness) -> dict[str, Any]:
    return {
        "ineq_id": witness.ineq_id,
        "class": witness.class_tag,
        "dim": witness.dim,
        "seed": witness.seed,
        "trial": witness.trial,
        "tol": tolerance_to_json(witness.tol),
        "inputs": [matrix_to_json(m) for m in witness.inputs],
        "report": report_to_json(witness.report),
    }


def witness_from_json(doc) -> Witness:
    if not isinstance(doc, dict):
        raise MalformedWitness("witness document must be a JSON object")
    required = ("ineq_id", "class", "dim", "seed", "trial", "tol", "inputs", "report")
    missing = [k for k in required if k not in doc]
    if missing:
        raise MalformedWitness(f"witness document missing fields: {missing}")
    try:
        inputs = tuple(matrix_from_json(m) for m in doc["inputs"])
        return Witness(
            ineq_id=doc["ineq_id"],
            class_tag=doc["class"],
            dim=int(doc["dim"]),
            seed=int(doc["seed"]),
            trial=int(doc["trial"]),
            tol=tolerance_from_json(doc["tol"]),
            inputs=inputs,
            report=report_from_json(doc["report"]),
        )
    except MalformedWitness:
        raise
    except (KeyError, TypeError, ValueError, InvalidMatrix) as exc:
        raise MalformedWitness(f"cannot parse witness: {exc}") from exc


def witness_document(witness: Witness) -> dict[str, Any]:
    return document("witness", witness_to_json(witness))


def witness_from_document(doc) -> Witness:
    if not isinstance(doc, dict) or doc.get("kind") != "witness":
        raise MalformedWitness('expected a document with "kind": "witness"')
    return witness_from_json(doc)


# --- campaigns ---------------------------------------------------------------


def _histogram_to_json(h: MarginHistogram) -> dict[str, Any]:
    return {
        "log10_lo": h._LO,
        "log10_hi": h._HI,
        "counts": list(h.counts),
        "underflow": h.underflow,
        "overflow": h.overflow,
    }


def _histogram_from_json(doc) -> MarginHistogram:
    h = MarginHistogram()
    h.counts = [int(c) for c in doc["counts"]]
    h.underflow = int(doc["underflow"])
    h.overflow = int(doc["overflow"])
    return h


def _side_stats_to_json(stats: dict[str, SideStats]) -> dict[str, Any]:
    return {
        label: {"min_margin": s.min_margin, "max_abs_margin": s.max_abs_margin}
        for label, s in stats.items()
    }


def _side_stats_from_json(doc) -> dict[str, SideStats]:
    return {
        label: SideStats(
            min_margin=float(s["min_margin"]), max_abs_margin=float(s["max_abs_margin"])
        )
        for label, s in doc.items()
    }


def _target_to_json(t: TargetResult) -> dict[str, Any]:
    return {
        "id": t.ineq_id,
        "class": t.class_tag,
        "dims": list(t.dims),
        "trials": t.trials,
        "holds": t.holds,
        "violated": t.violated,
        "hypothesis_violated": t.hypothesis_violated,
        "expected_to_hold": t.expected_to_hold,
        "min_margin": t.min_margin,
        "histogram": _histogram_to_json(t.histogram),
        "side_stats": _side_stats_to_json(t.side_stats),
        "worst_witness": None if t.worst_witness is None else witness_to_json(t.worst_witness),
    }


def _target_from_json(doc) -> TargetResult:
    return TargetResult(
        ineq_id=doc["id"],
        class_tag=doc["class"],
        dims=tuple(int(d) for d in doc["dims"]),
        trials=int(doc["trials"]),
        holds=int(doc["holds"]),
        violated=int(doc["violated"]),
        hypothesis_violated=int(doc["hypothesis_violated"]),
        expected_to_hold=bool(doc["expected_to_hold"]),
        min_margin=None if doc["min_margin"] is None else float(doc["min_margin"]),
        histogram=_histogram_from_json(doc["histogram"]),
        side_stats=_side_stats_from_json(doc["side_stats"]),
        worst_witness=None
        if doc["worst_witness"] is None
        else witness_from_json(doc["worst_witness"]),
    )


def config_to_json(config: CampaignConfig) -> dict[str, Any]:
    return {
        "targets": [[ineq_id, class_tag] for ineq_id, class_tag in config.targets],
        "dims": list(config.dims),
        "trials_per_dim": config.trials_per_dim,
        "seed": config.seed,
        "scale": config.scale,
        "tol": tolerance_to_json(config.tol),
    }


def config_from_json(doc) -> CampaignConfig:
    return CampaignConfig(
        targets=tuple((t[0], t[1]) for t in doc["targets"]),
        dims=tuple(int(d) for d in doc["dims"]),
        trials_per_dim=int(doc["trials_per_dim"]),
        seed=int(doc["seed"]),
        scale=float(doc.get("scale", 1.0)),
        tol=tolerance_from_json(doc["tol"]),
    )


def campaign_document(result: CampaignResult) -> dict[str, Any]:
    return document(
        "campaign",
        {
            "config": config_to_json(result.config),
            "results": [_target_to_json(t) for t in result.targets],
        },
    )


def campaign_from_document(doc) -> CampaignResult:
    if not isinstance(doc, dict) or doc.get("kind") != "campaign":
        raise ValueError('expected a document with "kind": "campaign"')
    return CampaignResult(
        config=config_from_json(doc["config"]),
        targets=tuple(_target_from_json(t) for t in doc["results"]),
    )


def report_document(report: InequalityReport, tol: Tolerance) -> dict[str, Any]:
    return document("report", {"tol": tolerance_to_json(tol), "report": report_to_json(report)})
