from argparse import Namespace
from logging import Logger

from env_loader import Settings
from reports import PASS, FileReportStore, ReportFormatter
from reports.report_formatter import JSON, TEXT
from suites import run_suite

from .command_utils import EXIT_OK, EXIT_VERIFICATION_FAILURE, params_from_settings

"""
Callback for the 'verify' command. Runs one suite (or all applicable suites) on the
configured preset, prints the report and optionally stores it as JSON.
The exit code is 0 when every check passes and 1 otherwise; the report is printed either way.
"""


def verify_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    p = params_from_settings(settings)
    report = run_suite(args.suite, p, settings)
    formatter = ReportFormatter(witness_width=args.witness_width)
    print(formatter.format_report(report, JSON if args.json else TEXT))
    if args.output:
        path = FileReportStore(base_dir=args.output, logger=logger).save(report)
        logger.info(f"Report written to {path}")
    if report["status"] != PASS:
        logger.warning(f"Suite {report['suite']} failed on {report['preset']}")
        return EXIT_VERIFICATION_FAILURE
    return EXIT_OK
