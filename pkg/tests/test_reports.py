import json

import pytest

from pbw_algebra import AlgebraElement
from reports import (
    FAIL,
    PASS,
    FileReportStore,
    ReportFormatter,
    make_report,
    run_check,
    run_control,
    run_difference_checks,
    validate_report,
)


def test_empty_report_passes():
    report = make_report("coideal", "s1", [])
    assert report["status"] == PASS
    assert validate_report(json.loads(ReportFormatter().format_report(report, "json"))) == report


def test_zero_witness_passes():
    check = run_check("zero", lambda: AlgebraElement.zero())
    assert check["status"] == PASS
    assert "witness" not in check


def test_nonzero_witness_fails():
    check = run_check("nonzero", lambda: AlgebraElement.generator("b"))
    assert check["status"] == FAIL
    assert check["witness"] == "b"


def test_exception_becomes_failure():
    check = run_check("boom", lambda: 1 / 0)
    assert check["status"] == FAIL
    assert check["witness"].startswith("ZeroDivisionError")


def test_control_prefix_and_polarity():
    rejected = run_control("perturbed", lambda: AlgebraElement.generator("a"))
    assert rejected["id"] == "control-perturbed"
    assert rejected["status"] == PASS
    accepted = run_control("control-perturbed", lambda: None)
    assert accepted["id"] == "control-perturbed"
    assert accepted["status"] == FAIL


def test_difference_checks():
    checks = run_difference_checks(lambda: {"one": None, "two": "x"}, "-s1")
    assert [check["id"] for check in checks] == ["one-s1", "two-s1"]
    assert [check["status"] for check in checks] == [PASS, FAIL]

    def broken():
        raise ValueError("no")

    assert [check["id"] for check in run_difference_checks(broken, "-s1")] == ["evaluate-s1"]


def test_text_format_lists_witness():
    report = make_report("pbw", "rplus", [run_check("ok", lambda: None), run_check("bad", lambda: "b - c")])
    text = ReportFormatter().format_report(report)
    assert "witness: b - c" in text
    assert text.splitlines()[-1] == "2 checks, 1 failed: FAIL"


def test_witness_width():
    report = make_report("pbw", "rplus", [run_check("bad", lambda: "x" * 50)])
    assert "witness: " + "x" * 10 + " ..." in ReportFormatter(witness_width=10).format_report(report)


def test_unknown_format():
    with pytest.raises(ValueError):
        ReportFormatter().format_report(make_report("pbw", "rplus", []), "xml")


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"suite": "pbw", "preset": "s1", "checks": []},
        {"suite": "pbw", "preset": "s1", "checks": [], "status": "fail"},
        {"suite": "pbw", "preset": "s1", "checks": [{"id": "x", "status": "maybe", "ms": 1.0}], "status": "fail"},
        {"suite": "pbw", "preset": "s1", "checks": [{"id": "x", "status": "pass", "ms": True}], "status": "pass"},
        {"suite": "pbw", "preset": "s1", "checks": [], "status": "pass", "extra": 1},
    ],
)
def test_invalid_reports(data):
    with pytest.raises(ValueError):
        validate_report(data)


def test_file_store(tmp_path):
    store = FileReportStore(base_dir=str(tmp_path / "reports"))
    report = make_report("coideal", "s1", [run_check("ok", lambda: None)])
    path = store.save(report)
    assert path.name == "coideal-s1.json"
    assert store.load("coideal", "s1") == report
    store.delete("coideal", "s1")
    with pytest.raises(FileNotFoundError):
        store.load("coideal", "s1")
