from typing import List, TypedDict

PASS = "pass"
FAIL = "fail"


class _CheckResultFields(TypedDict):
    id: str
    status: str
    ms: float


class CheckResult(_CheckResultFields, total=False):
    witness: str


class SuiteReport(TypedDict):
    suite: str
    preset: str
    checks: List[CheckResult]
    status: str


def overall_status(checks: List[CheckResult]) -> str:
    return PASS if all(check["status"] == PASS for check in checks) else FAIL


def make_report(suite: str, preset: str, checks: List[CheckResult]) -> SuiteReport:
    return SuiteReport(suite=suite, preset=preset, checks=list(checks), status=overall_status(checks))
