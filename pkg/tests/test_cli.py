# Convfix Lab
# Tests for the command line and its exit codes
# October 2026

import json

from src.app.cli import EXIT_IO, EXIT_OK, EXIT_PARSE, EXIT_UNKNOWN_CASE, main
from src.app.runner.report import read_jsonl
from src.app.runner.suites import find_case
from src.app.scenario import ScenarioConfig

HALF_DIFFERENCE = "fixedpoint/cyclic:4/half-difference"


def test_group_command(capsys):
    assert main(["group", "--spec", "cyclic:4"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "Z4: order 4, abelian"
    assert main(["group", "--spec", "symmetric:3", "--dump"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["order"] == 6


def test_bad_group_spec():
    assert main(["group", "--spec", "cyclic:0"]) == EXIT_PARSE


def test_gen_measure(capsys):
    assert main(["gen-measure", "--group", "symmetric:3", "--profile", "real-signed",
                 "--density", "0.5", "--seed", "4"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["carrier"] == "symmetric:3"
    assert len(data["atoms"]) == 3
    assert all(atom["im"] == 0 for atom in data["atoms"])


def test_run_writes_reports(tmp_path, capsys):
    config = tmp_path / "scenario.json"
    config.write_text(json.dumps({"groups": ["cyclic:2"], "draws_per_group": 2, "suites": ["abelian_prop"],
                                  "limits": {"workers": 2}}), encoding="utf-8")
    out, summary = tmp_path / "report.jsonl", tmp_path / "summary.csv"
    code = main(["run", "--config", str(config), "--out", str(out), "--summary", str(summary)])
    assert code == EXIT_OK
    header, records = read_jsonl(str(out))
    assert header["cases"] == len(records) == 24
    assert header["scenario"]["groups"] == ["cyclic:2"]
    assert summary.read_text(encoding="utf-8").startswith("suite,case_id")
    assert "24 cases, 0 failed, 0 raised" in capsys.readouterr().out


def test_run_with_a_bad_scenario(tmp_path):
    config = tmp_path / "scenario.json"
    config.write_text('{"suites": ["nope"]}', encoding="utf-8")
    assert main(["run", "--config", str(config), "--out", str(tmp_path / "r.jsonl")]) == EXIT_PARSE
    assert main(["run", "--config", str(tmp_path / "missing.json")]) == EXIT_IO


def test_explain_by_case_id(capsys):
    assert main(["explain", "--case", HALF_DIFFERENCE]) == EXIT_OK
    assert "χ(3) = -1 ≠ χ(1)³ = 1" in capsys.readouterr().out
    assert main(["explain", "--case", "measure/cyclic:4/nope"]) == EXIT_UNKNOWN_CASE


def test_explain_from_a_replay_file(tmp_path, capsys):
    inputs = find_case(ScenarioConfig(), HALF_DIFFERENCE).inputs
    record = tmp_path / "record.json"
    record.write_text(json.dumps({"case_id": HALF_DIFFERENCE, "inputs": inputs}), encoding="utf-8")
    assert main(["explain", "--replay", str(record)]) == EXIT_OK
    assert capsys.readouterr().out.startswith(f"case      {HALF_DIFFERENCE}")

    bare = tmp_path / "inputs.json"
    bare.write_text(json.dumps(inputs), encoding="utf-8")
    assert main(["explain", "--replay", str(bare)]) == EXIT_OK
    assert "case      fixedpoint/replay" in capsys.readouterr().out

    empty = tmp_path / "empty.json"
    empty.write_text("{}", encoding="utf-8")
    assert main(["explain", "--replay", str(empty)]) == EXIT_UNKNOWN_CASE


def test_init_config(tmp_path, capsys):
    path = tmp_path / "scenario.json"
    assert main(["init-config", "--out", str(path)]) == EXIT_OK
    assert main(["init-config", "--out", str(path)]) == EXIT_OK
    assert "left untouched" in capsys.readouterr().out


def test_explain_an_inline_measure(capsys):
    assert main(["explain", "--measure", "1:0.5, 3:-0.5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("case      fixedpoint/cyclic:4/inline")
    assert "χ(3) = -1 ≠ χ(1)³ = 1" in out
    assert main(["explain", "--suite", "lattice", "--group", "Z", "--measure=-1:0.5, 1:0.5"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("case      lattice/Z/inline")


def test_explain_an_inline_character(capsys):
    assert main(["explain", "--group", "cyclic:6", "--dual", "char:2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("case      dual/cyclic:6/inline")
    assert "verdict   pass" in out


def test_explain_rejects_bad_inline_inputs():
    assert main(["explain", "--measure", "1:abc"]) == EXIT_PARSE
    assert main(["explain", "--dual", "char:x"]) == EXIT_PARSE
    assert main(["explain", "--dual", "chi:1"]) == EXIT_PARSE
    assert main(["explain", "--group", "symmetric:3", "--dual", "char:1"]) == EXIT_PARSE
    assert main(["explain", "--suite", "dual", "--measure", "1:1"]) == EXIT_PARSE
