# Convfix Lab
# Tests for report encoding, digests and output files
# October 2026

import csv
import json

import numpy as np

from config.vars import VERSION
from src.app.runner.report import (
    FAIL, PASS, SUMMARY_COLUMNS, UNDECIDED, ReportRecord, encode_json, inputs_digest, read_jsonl, totals,
    write_jsonl, write_summary,
)

INPUTS = {"suite": "measure", "group": "cyclic:4", "seed": 12, "limits": {"n_max": 64}, "eps": 1e-9}


def test_encode_json_scalars():
    assert encode_json(1.0) == "1.0"
    assert encode_json(0.1) == "0.10000000000000001"
    assert encode_json(float("nan")) == "null"
    assert encode_json(float("inf")) == "null"
    assert encode_json(1 + 2j) == "[1.0, 2.0]"
    assert encode_json(np.int64(7)) == "7"
    assert encode_json(np.float64(2.5)) == "2.5"
    assert encode_json(True) == "true"
    assert encode_json(None) == "null"
    assert encode_json("χ") == '"χ"'


def test_encode_json_keeps_key_order():
    assert encode_json({"b": [1, 2.0], "a": np.array([0.5])}) == '{"b": [1, 2.0], "a": [0.5]}'


def test_digest_survives_a_round_trip():
    decoded = json.loads(encode_json(INPUTS))
    assert decoded == INPUTS
    assert inputs_digest(decoded) == inputs_digest(INPUTS)
    assert inputs_digest({**INPUTS, "seed": 13}) != inputs_digest(INPUTS)


def _records():
    return [
        ReportRecord("measure", "measure/cyclic:4/0000", INPUTS, PASS, {"cesaro_last": 1e-12, "bad": float("nan")},
                     {"dim_fix": 1}),
        ReportRecord("measure", "measure/cyclic:4/0001", INPUTS, FAIL),
        ReportRecord("dual", "dual/cyclic:4/0000", INPUTS, UNDECIDED),
    ]


def test_max_residual_skips_non_finite():
    assert _records()[0].max_residual == 1e-12
    assert _records()[1].max_residual == 0.0


def test_jsonl_round_trip(tmp_path):
    path = tmp_path / "report.jsonl"
    write_jsonl(_records(), str(path), {"cases": 3})
    header, records = read_jsonl(str(path))
    assert header == {"version": VERSION, "cases": 3}
    assert [r["case_id"] for r in records] == [r.case_id for r in _records()]
    assert records[0]["inputs"] == INPUTS
    assert records[0]["inputs_digest"] == inputs_digest(INPUTS)
    assert records[0]["residuals"]["bad"] is None


def test_summary_csv(tmp_path):
    path = tmp_path / "summary.csv"
    write_summary(_records(), str(path))
    with open(path, newline="", encoding="utf-8") as f:
        rows = list(csv.reader(f))
    assert tuple(rows[0]) == SUMMARY_COLUMNS
    assert rows[1][2:5] == ["cyclic:4", "12", "1"]
    assert rows[1][-1] == "True"
    assert rows[2][-1] == "False"


def test_totals():
    assert totals(_records()) == {
        "measure": {PASS: 1, FAIL: 1, UNDECIDED: 0},
        "dual": {PASS: 0, FAIL: 0, UNDECIDED: 1},
    }
