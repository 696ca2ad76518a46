from .check_result import FAIL, PASS, CheckResult, SuiteReport, make_report, overall_status
from .check_runner import CONTROL_PREFIX, expect, run_check, run_control, run_difference_checks
from .report_formatter import ReportFormatter, validate_report
from .file_report_store import FileReportStore

__all__ = [
    "CONTROL_PREFIX",
    "FAIL",
    "PASS",
    "CheckResult",
    "FileReportStore",
    "ReportFormatter",
    "SuiteReport",
    "expect",
    "make_report",
    "overall_status",
    "run_check",
    "run_control",
    "run_difference_checks",
    "validate_report",
]
