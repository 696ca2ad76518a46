"""
Report Formatter for verification suite results.

This module provides the ReportFormatter class that renders suite reports as
a text table or as JSON, and validate_report, which checks a decoded JSON
report against the documented schema.
"""

import json
import logging
from typing import Any, Dict, List

from .check_result import FAIL, PASS, SuiteReport

logger = logging.getLogger(__name__)

TEXT = "text"
JSON = "json"


class ReportFormatter:
    """
    Formatter for suite reports.

    Text mode lists one check per row with its status and elapsed time, the
    witness of a failing check on the following line, and a summary line.
    """

    def __init__(self, witness_width: int = 0):
        """
        Initialize the Report Formatter.

        Args:
            witness_width: Truncate printed witnesses to this many characters (0 keeps them whole)
        """
        self.witness_width = witness_width

    def format_report(self, report: SuiteReport, mode: str = TEXT) -> str:
        """
        Format a suite report.

        Args:
            report: The suite report
            mode: "text" or "json"

        Returns:
            The formatted report
        """
        if mode == JSON:
            return self.format_json(report)
        if mode == TEXT:
            return self.format_text(report)
        raise ValueError(f"Unknown report format: {mode}")

    def format_json(self, report: SuiteReport) -> str:
        return json.dumps(report, indent=2, ensure_ascii=False)

    def format_text(self, report: SuiteReport) -> str:
        checks = report["checks"]
        width = max([len("check")] + [len(check["id"]) for check in checks])
        lines = [
            f"suite: {report['suite']}    preset: {report['preset']}",
            f"{'check'.ljust(width)}  status  {'ms':>10}",
            f"{'-' * width}  ------  {'-' * 10}",
        ]
        for check in checks:
            lines.append(f"{check['id'].ljust(width)}  {check['status'].ljust(6)}  {check['ms']:>10.1f}")
            if "witness" in check:
                lines.append(f"    witness: {self._shorten(check['witness'])}")
        failed = sum(1 for check in checks if check["status"] != PASS)
        lines.append(f"{len(checks)} checks, {failed} failed: {report['status'].upper()}")
        return "\n".join(lines)

    def _shorten(self, witness: str) -> str:
        if self.witness_width and len(witness) > self.witness_width:
            return witness[: self.witness_width] + " ..."
        return witness


def _require(data: Dict[str, Any], key: str, kind, where: str):
    if key not in data:
        raise ValueError(f"{where}: missing field '{key}'")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ValueError(f"{where}: field '{key}' has type {type(value).__name__}")
    return value


def validate_report(data: Any) -> SuiteReport:
    """
    Check a decoded JSON document against the report schema.

    Returns:
        The document, typed as a SuiteReport

    Raises:
        ValueError: describing the first violation found
    """
    if not isinstance(data, dict):
        raise ValueError("report must be an object")
    _require(data, "suite", str, "report")
    _require(data, "preset", str, "report")
    status = _require(data, "status", str, "report")
    checks: List = _require(data, "checks", list, "report")
    unknown = set(data) - {"suite", "preset", "checks", "status"}
    if unknown:
        raise ValueError(f"report: unexpected fields {sorted(unknown)}")
    for index, check in enumerate(checks):
        where = f"checks[{index}]"
        if not isinstance(check, dict):
            raise ValueError(f"{where} must be an object")
        _require(check, "id", str, where)
        if _require(check, "status", str, where) not in (PASS, FAIL):
            raise ValueError(f"{where}: status must be 'pass' or 'fail'")
        _require(check, "ms", (int, float), where)
        if "witness" in check:
            _require(check, "witness", str, where)
        extra = set(check) - {"id", "status", "ms", "witness"}
        if extra:
            raise ValueError(f"{where}: unexpected fields {sorted(extra)}")
    expected = PASS if all(check["status"] == PASS for check in checks) else FAIL
    if status != expected:
        raise ValueError(f"report: status '{status}' does not match its checks")
    return data
