"""JSON schemas: strict parsing, lossless round-trips, deterministic output."""

import numpy as np
import pytest

from svineq import __version__
from svineq.fuzzer import CampaignConfig, SearchTarget, run_campaign, search_counterexample
from svineq.inequalities import check
from svineq.numkernel import DEFAULT_TOL, InvalidMatrix, Tolerance
from svineq.serialize import (
    SCHEMA_VERSION,
    campaign_document,
    campaign_from_document,
    document,
    dumps,
    dumps_compact,
    loads_strict,
    matrix_from_json,
    matrix_to_json,
    parse_matrix_text,
    report_document,
    report_from_json,
    report_to_json,
    tolerance_from_json,
    tolerance_to_json,
    witness_document,
    witness_from_document,
)

from conftest import draw, mat


# --- matrices ---------------------------------------------------------------


def test_matrix_round_trip_exact():
    m = mat([[1.5 - 2j, 3e-17], [0, -4j]])
    back = matrix_from_json(matrix_to_json(m))
    assert np.array_equal(m, back)


def test_matrix_json_shape():
    doc = matrix_to_json(mat([[1j]]))
    assert doc == {"n": 1, "entries": [[[0.0, 1.0]]]}


def test_parse_matrix_text_round_trip():
    m = draw("ginibre", 3, seed=8)[0]
    text = dumps(matrix_to_json(m))
    assert np.array_equal(parse_matrix_text(text), m)


@pytest.mark.parametrize(
    "payload",
    [
        '{"n": 2, "entries": [[[1,0],[0,0]],[[0,0]]]}',  # ragged rows
        '{"n": 2, "entries": [[[1,0],[0,0]]]}',  # wrong row count
        '{"n": 1, "entries": [[[1,0,0]]]}',  # triple instead of pair
        '{"n": 1, "entries": [[[NaN,0]]]}',  # NaN literal
        '{"n": 1, "entries": [[[Infinity,0]]]}',
        '{"n": 1, "entries": [[[true,0]]]}',  # bool masquerading as number
        '{"n": "1", "entries": [[[1,0]]]}',  # n not an int
        '{"entries": [[[1,0]]]}',  # missing n
        '{"n": 65, "entries": []}',  # over the dimension cap
        "[1,2,3]",  # not an object
        "not json",
    ],
)
def test_parse_matrix_text_rejects_malformed(payload):
    with pytest.raises(InvalidMatrix):
        parse_matrix_text(payload)


def test_loads_strict_rejects_nan_constants():
    with pytest.raises(ValueError):
        loads_strict("[NaN]")
    with pytest.raises(ValueError):
        loads_strict("[-Infinity]")


# --- tolerances and reports ----------------------------------------------------


def test_tolerance_round_trip():
    t = Tolerance(tol_abs=3e-11, tol_rel=2e-8)
    assert tolerance_from_json(tolerance_to_json(t)) == t


def test_report_round_trip_preserves_everything():
    (a,) = draw("normal", 3, seed=4)
    rep = check("thm-2.1", [a])
    back = report_from_json(report_to_json(rep))
    assert back == rep


def test_report_round_trip_with_skipped_sides():
    rep = check("proof-facts-2.1", [mat([[0, 1], [1, 0]]), mat([[1, 0], [0, -1]])])
    assert rep.skipped == ("sqrt",)
    assert report_from_json(report_to_json(rep)) == rep


def test_report_document_header():
    (a,) = draw("normal", 2, seed=4)
    doc = report_document(check("thm-2.1", [a]), DEFAULT_TOL)
    assert doc["schema"] == SCHEMA_VERSION == 1
    assert doc["tool"] == "svineq"
    assert doc["version"] == __version__
    assert doc["kind"] == "report"
    assert doc["report"]["id"] == "thm-2.1"


def test_document_json_is_deterministic_and_finite():
    body = {"x": 1.0, "y": [1e-300, 2.5]}
    assert dumps(document("demo", body)) == dumps(document("demo", body))
    assert dumps_compact(document("demo", body)).endswith("\n") is False
    with pytest.raises(ValueError):
        dumps({"bad": float("nan")})


# --- witnesses -------------------------------------------------------------------


def test_witness_document_round_trip():
    w = search_counterexample(
        SearchTarget(target_id="loewner-cartesian-general", budget=20), seed=0
    )
    assert w is not None
    doc = witness_document(w)
    assert doc["kind"] == "witness"
    back = witness_from_document(loads_strict(dumps(doc)))
    assert back.ineq_id == w.ineq_id
    assert back.trial == w.trial
    assert back.report == w.report
    for x, y in zip(back.inputs, w.inputs):
        assert np.array_equal(x, y)


def test_witness_document_rejects_wrong_kind():
    w = search_counterexample(
        SearchTarget(target_id="loewner-cartesian-general", budget=20), seed=0
    )
    doc = witness_document(w)
    doc["kind"] = "campaign"
    from svineq.fuzzer import MalformedWitness

    with pytest.raises(MalformedWitness):
        witness_from_document(doc)


def test_witness_json_rejects_missing_fields():
    from svineq.fuzzer import MalformedWitness
    from svineq.serialize import witness_from_json

    with pytest.raises(MalformedWitness):
        witness_from_json({"id": "thm-2.1"})


# --- campaigns ---------------------------------------------------------------------


def _campaign():
    cfg = CampaignConfig(
        targets=(("thm-2.1", "normal"), ("loewner-cartesian-general", "ginibre")),
        dims=(2, 3),
        trials_per_dim=6,
        seed=5,
        tol=DEFAULT_TOL,
    )
    return run_campaign(cfg)


def test_campaign_document_round_trip_is_lossless():
    result = _campaign()
    doc = campaign_document(result)
    assert doc["kind"] == "campaign"
    back = campaign_from_document(loads_strict(dumps(doc)))
    # lossless: dumping the reconstruction gives identical bytes
    assert dumps(campaign_document(back)) == dumps(doc)


def test_campaign_document_echoes_config():
    doc = campaign_document(_campaign())
    cfg = doc["config"]
    assert cfg["seed"] == 5
    assert cfg["dims"] == [2, 3]
    assert cfg["trials_per_dim"] == 6
    assert cfg["targets"] == [
        ["thm-2.1", "normal"],
        ["loewner-cartesian-general", "ginibre"],
    ]
    assert cfg["tol"] == {"tol_abs": 1e-12, "tol_rel": 1e-9}
