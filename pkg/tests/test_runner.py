# Convfix Lab
# Tests for case building, the suite runner and single-case replay
# October 2026

import pytest

from src.app.scenario import Limits, ScenarioConfig
from src.app.runner.explain import explain_case, format_record
from src.app.runner.report import FAIL, PASS, encode_json
from src.app.runner.runner import SuiteRunner
from src.app.runner.suites import (
    build_cases, derive_seed, find_case, inline_case, parse_dual_shorthand, run_inputs,
)
from src.errors import PreconditionError, UnknownCaseError


def _config(workers: int = 1, **fields) -> ScenarioConfig:
    base = {"groups": ("cyclic:4", "symmetric:3"), "draws_per_group": 2, "seed": 3,
            "suites": ("measure", "fixedpoint", "abelian_prop"), "limits": Limits(n_max=256, workers=workers)}
    return ScenarioConfig(**{**base, **fields})


def test_cases_are_sorted_and_unique():
    cases = build_cases(_config())
    keys = [(c.suite, c.case_id) for c in cases]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    ids = {c.case_id for c in cases}
    assert "fixedpoint/cyclic:4/half-difference" in ids
    assert "abelian_prop/cyclic:12/0001" in ids
    assert "measure/symmetric:3/greenleaf" in ids


def test_seeds_are_stable():
    assert derive_seed(0, "dual", "cyclic:4", 1) == derive_seed(0, "dual", "cyclic:4", 1)
    assert derive_seed(0, "dual", "cyclic:4", 1) != derive_seed(1, "dual", "cyclic:4", 1)
    assert 0 <= derive_seed(7, "x") < 2**32


def test_runs_do_not_depend_on_worker_count():
    serial = SuiteRunner(_config(workers=1)).run()
    pooled = SuiteRunner(_config(workers=4)).run()
    assert [encode_json(r.to_json()) for r in serial] == [encode_json(r.to_json()) for r in pooled]
    assert all("workers" not in c.inputs["limits"] for c in build_cases(_config(workers=4)))


def test_fixtures_pass():
    records = {r.case_id: r for r in SuiteRunner(_config(workers=2)).run()}
    for case_id in ("measure/cyclic:4/shift", "measure/cyclic:4/identity", "measure/symmetric:3/identity",
                    "fixedpoint/cyclic:4/half-difference", "fixedpoint/symmetric:3/identity"):
        assert records[case_id].verdict == PASS, case_id
    assert all(r.verdict == PASS for r in records.values() if r.suite == "abelian_prop")


def test_debug_stats_count_every_case():
    runner = SuiteRunner(_config(workers=2, suites=("abelian_prop",)))
    records = runner.run()
    stats = runner.get_debug_stats()
    assert stats["cases_run"] == len(records)
    assert stats["passed"] + stats["failed"] + stats["undecided"] == len(records)
    assert stats["errors_caught"] == 0


def test_crashing_cases_become_fail_records(monkeypatch):
    def boom(inputs):
        raise RuntimeError("boom")

    monkeypatch.setattr("src.app.runner.runner.run_inputs", boom)
    runner = SuiteRunner(_config(workers=3, groups=("cyclic:2",), suites=("abelian_prop",)))
    records = runner.run()
    assert len(records) == 24
    assert all(r.verdict == FAIL for r in records)
    assert records[0].artifacts == {"error": "RuntimeError: boom"}
    assert runner.get_debug_stats()["errors_caught"] == 24


def test_find_case():
    config = _config()
    assert find_case(config, "measure/cyclic:4/shift").inputs["measure"] == "1:1"
    with pytest.raises(UnknownCaseError):
        find_case(config, "nope/cyclic:4/shift")
    with pytest.raises(UnknownCaseError):
        find_case(config, "measure/cyclic:5/0000")


def test_unknown_suite_in_inputs():
    with pytest.raises(PreconditionError):
        run_inputs({"suite": "nope"})


def test_explain_shows_the_conflict():
    record = explain_case(ScenarioConfig(), "fixedpoint/cyclic:4/half-difference")
    assert record.verdict == PASS
    text = format_record(record)
    assert "conflict  χ(3) = -1 ≠ χ(1)³ = 1" in text
    assert text.splitlines()[0] == "case      fixedpoint/cyclic:4/half-difference"


def test_lattice_walk_fixture():
    verdict, residuals, artifacts = run_inputs(find_case(ScenarioConfig(), "lattice/Z/walk").inputs)
    assert verdict == PASS
    assert residuals["power4_at_0"] == 0.375
    assert not artifacts["compact"]


def test_inline_cases():
    case = inline_case(ScenarioConfig(), "lp", "cyclic:6", measure="1:1", p=3.0)
    assert case.case_id == "lp/cyclic:6/inline"
    assert case.inputs["p"] == 3.0
    assert "workers" not in case.inputs["limits"]
    assert run_inputs(case.inputs)[0] == PASS
    dual = inline_case(ScenarioConfig(), "mukherjea_dual", "cyclic:5", dual="char:0")
    assert dual.inputs["character"] == 0
    assert parse_dual_shorthand(" char:3 ") == {"character": 3}
    with pytest.raises(PreconditionError):
        inline_case(ScenarioConfig(), "fixedpoint", "cyclic:4")
    with pytest.raises(PreconditionError):
        inline_case(ScenarioConfig(), "nope", "cyclic:4", measure="0:1")


def test_long_run_on_a_drawn_state():
    inputs = find_case(ScenarioConfig(), "measure/cyclic:4/0058").inputs
    verdict, residuals, artifacts = run_inputs(inputs)
    assert verdict == PASS
    assert artifacts["cesaro_verdict"] == "converged"
    assert residuals["haar_fit"] <= 1e-8


def test_quaternion_draw_with_identity_irrep_image():
    config = ScenarioConfig(draws_per_group=500)
    verdict, _, artifacts = run_inputs(find_case(config, "fixedpoint/quaternion8/0363").inputs)
    assert verdict == PASS
    assert artifacts["irrep_fix_dim"] == 2
