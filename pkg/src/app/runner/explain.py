# Convfix Lab
# Verbose single-case replay
# October 2026

import json

from src.app.scenario import ScenarioConfig
from src.app.runner.report import ReportRecord, encode_json
from src.app.runner.suites import find_case, run_inputs
from src.errors import UnknownCaseError

# artifacts printed first, in this order, when present
HIGHLIGHTS = ("measure", "abs", "dual", "character", "cesaro_verdict", "limit",
              "cesaro_residuals", "dim_fix", "dims", "z_set", "vn_dim")


def load_replay(file_path: str) -> tuple[str, dict]:
    """
    Read a replay file: a report record (with its inputs) or a bare inputs object.

    Raises:
        UnknownCaseError: if the file holds neither.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        data = json.load(f)
    inputs = data.get("inputs", data) if isinstance(data, dict) else None
    if not isinstance(inputs, dict) or "suite" not in inputs:
        raise UnknownCaseError(f"{file_path} holds no case inputs")
    return data.get("case_id", f"{inputs['suite']}/replay"), inputs


def replay(case_id: str, inputs: dict) -> ReportRecord:
    verdict, residuals, artifacts = run_inputs(inputs)
    return ReportRecord(inputs["suite"], case_id, inputs, verdict, residuals, artifacts)


def explain_case(config: ScenarioConfig, case_id: str) -> ReportRecord:
    return replay(case_id, find_case(config, case_id).inputs)


def format_record(record: ReportRecord) -> str:
    """Human-readable rendering of one replayed case."""
    lines = [f"case      {record.case_id}",
             f"verdict   {record.verdict}",
             f"digest    {record.inputs_digest}"]
    artifacts = dict(record.artifacts)
    conflict = artifacts.pop("conflict", None)
    if conflict is not None:
        lines.append(f"conflict  {conflict['witness']}")
    for key in HIGHLIGHTS:
        if key in artifacts:
            lines.append(f"{key:<9} {encode_json(artifacts.pop(key))}")
    for key, value in artifacts.items():
        lines.append(f"{key:<9} {encode_json(value)}")
    if record.residuals:
        lines.append("residuals")
        for key, value in record.residuals.items():
            lines.append(f"  {key:<24} {encode_json(value)}")
    return "\n".join(lines)
