# Convfix Lab
# Suite runner: worker pool, crash capture and deterministic merge
# October 2026

import logging
import threading
import time
import traceback
from concurrent.futures import ThreadPoolExecutor

from src.app.scenario import ScenarioConfig
from src.app.runner.report import FAIL, PASS, UNDECIDED, ReportRecord
from src.app.runner.suites import Case, build_cases, run_inputs

logger = logging.getLogger(__name__)


class SuiteRunner:
    """Runs every case of a scenario and collects one ReportRecord per case."""
    def __init__(self, config: ScenarioConfig):
        self.config = config
        self._lock = threading.Lock()

        # Debug statistics
        self.debug_stats = {
            "cases_run": 0,
            "passed": 0,
            "failed": 0,
            "undecided": 0,
            "errors_caught": 0,
        }

    def run(self) -> list[ReportRecord]:
        """
        Fan the cases out over a bounded pool and merge in (suite, case_id) order.

        Returns:
            list[ReportRecord]: sorted records, independent of completion order.
        """
        cases = build_cases(self.config)
        started = time.time()
        self._log_debug_message(f"{len(cases)} cases over {len(self.config.suites)} suites, "
                                f"{self.config.limits.workers} workers")
        with ThreadPoolExecutor(max_workers=self.config.limits.workers) as pool:
            records = list(pool.map(self._run_case_wrapper, cases))
        records.sort(key=lambda r: (r.suite, r.case_id))
        self._log_debug_message(f"finished in {time.time() - started:.1f}s: {self.get_debug_stats()}")
        return records

    def _run_case_wrapper(self, case: Case) -> ReportRecord:
        """Wrapper to turn a crashing case into a fail record."""
        try:
            verdict, residuals, artifacts = run_inputs(case.inputs)
            record = ReportRecord(case.suite, case.case_id, case.inputs, verdict, residuals, artifacts)
        except Exception as e:
            with self._lock:
                self.debug_stats["errors_caught"] += 1
            self._log_debug_message(f"case {case.case_id} raised {type(e).__name__}: {e}")
            self._log_debug_message(f"Traceback: {traceback.format_exc()}")
            record = ReportRecord(case.suite, case.case_id, case.inputs, FAIL,
                                  artifacts={"error": f"{type(e).__name__}: {e}"})
        self._count(record)
        return record

    def _count(self, record: ReportRecord):
        key = {PASS: "passed", FAIL: "failed", UNDECIDED: "undecided"}[record.verdict]
        with self._lock:
            self.debug_stats["cases_run"] += 1
            self.debug_stats[key] += 1

    def _log_debug_message(self, message: str):
        logger.debug(f"[runner] {message}")

    def get_debug_stats(self) -> dict:
        """Return current debug statistics."""
        with self._lock:
            return self.debug_stats.copy()
