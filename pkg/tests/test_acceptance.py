# Convfix Lab
# Full-scale runs: the default scenario and the large draw counts
# October 2026

from dataclasses import replace

import pytest

from src.app.cli import EXIT_OK, main
from src.app.runner.report import FAIL, read_jsonl
from src.app.runner.runner import SuiteRunner
from src.app.scenario import ScenarioConfig

pytestmark = pytest.mark.slow


def _failures(records) -> list[str]:
    return [r.case_id for r in records if r.verdict == FAIL]


def test_default_scenario_exits_cleanly(tmp_path, capsys):
    out = tmp_path / "report.jsonl"
    assert main(["run", "--out", str(out)]) == EXIT_OK
    assert ", 0 failed, 0 raised" in capsys.readouterr().out
    _, records = read_jsonl(str(out))
    states = [r for r in records if r["suite"] == "measure"
              and r["inputs"].get("profile", {}).get("style") == "probability"]
    assert states
    assert all(r["artifacts"]["cesaro_verdict"] == "converged" for r in states)


@pytest.mark.parametrize("suites, draws", [
    (("measure", "fixedpoint"), 500),
    (("dual",), 300),
    (("abelian_prop",), 500),
])
def test_large_draw_counts(suites, draws):
    config = replace(ScenarioConfig(), suites=suites, draws_per_group=draws)
    records = SuiteRunner(config).run()
    assert len(records) >= draws
    assert _failures(records) == []
