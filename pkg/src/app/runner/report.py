# Convfix Lab
# Report records, JSON-lines output and the CSV summary
# October 2026

import csv
import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from config.vars import JSON_DIGITS, VERSION

PASS = "pass"
FAIL = "fail"
UNDECIDED = "undecided"
VERDICTS = (PASS, FAIL, UNDECIDED)

SUMMARY_COLUMNS = ("suite", "case_id", "group", "seed", "dim_fix", "has_char", "max_residual", "pass")


def inputs_digest(inputs: dict) -> str:
    """sha256 of the canonical JSON form of a case's inputs."""
    canonical = json.dumps(inputs, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass
class ReportRecord:
    """
    One case of one suite.

    inputs is everything needed to replay the case; it is embedded in
    every record, so fail records can always be replayed.
    """
    suite: str
    case_id: str
    inputs: dict
    verdict: str = PASS
    residuals: dict = field(default_factory=dict)
    artifacts: dict = field(default_factory=dict)

    @property
    def inputs_digest(self) -> str:
        return inputs_digest(self.inputs)

    @property
    def max_residual(self) -> float:
        finite = [abs(v) for v in self.residuals.values() if isinstance(v, (int, float)) and math.isfinite(v)]
        return max(finite, default=0.0)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "case_id": self.case_id,
            "inputs_digest": self.inputs_digest,
            "verdict": self.verdict,
            "residuals": self.residuals,
            "artifacts": self.artifacts,
            "inputs": self.inputs,
        }


def encode_json(value) -> str:
    """
    Serialise to JSON with every float written to JSON_DIGITS significant digits.

    Keys keep insertion order; non-finite floats become null.
    """
    if value is None or isinstance(value, (bool, np.bool_)):
        return json.dumps(None if value is None else bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return "null"
        text = format(value, f".{JSON_DIGITS}g")
        # keep floats floats so digests survive a round trip
        return text if any(c in text for c in ".en") else text + ".0"
    if isinstance(value, complex):
        return encode_json([value.real, value.imag])
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(str(k), ensure_ascii=False)}: {encode_json(v)}"
                               for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ", ".join(encode_json(v) for v in value) + "]"
    raise TypeError(f"cannot encode {type(value).__name__} as JSON")


def write_jsonl(records: list[ReportRecord], file_path: str, header: dict) -> None:
    """First line is the run header, then one record per line."""
    with open(file_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(encode_json({"version": VERSION, **header}) + "\n")
        for record in records:
            f.write(encode_json(record.to_json()) + "\n")


def read_jsonl(file_path: str) -> tuple[dict, list[dict]]:
    with open(file_path, "r", encoding="utf-8") as f:
        lines = [json.loads(line) for line in f if line.strip()]
    if not lines:
        return {}, []
    return lines[0], lines[1:]


def write_summary(records: list[ReportRecord], file_path: str) -> None:
    with open(file_path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(SUMMARY_COLUMNS)
        for r in records:
            writer.writerow([
                r.suite,
                r.case_id,
                r.inputs.get("group", ""),
                r.inputs.get("seed", ""),
                r.artifacts.get("dim_fix", ""),
                r.artifacts.get("has_char", ""),
                format(r.max_residual, f".{JSON_DIGITS}g"),
                r.verdict == PASS,
            ])


def totals(records: list[ReportRecord]) -> dict:
    counts = {suite: dict.fromkeys(VERDICTS, 0) for suite in dict.fromkeys(r.suite for r in records)}
    for r in records:
        counts[r.suite][r.verdict] += 1
    return counts
