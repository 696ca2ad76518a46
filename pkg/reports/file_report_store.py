import json
import logging
import os
from pathlib import Path

from .check_result import SuiteReport
from .report_formatter import validate_report


class FileReportStore:
    def __init__(
        self,
        *,
        base_dir: str = "./data/reports",
        logger: logging.Logger = logging.getLogger(__name__),
    ):
        self.base_dir = base_dir
        self.logger = logger

    def _filepath(self, suite: str, preset: str) -> Path:
        return Path(self.base_dir) / f"{suite}-{preset}.json"

    def save(self, report: SuiteReport) -> Path:
        self._mkdir(self.base_dir)
        filepath = self._filepath(report["suite"], report["preset"])
        with open(filepath, "w", encoding="utf-8") as file:
            file.write(json.dumps(report, indent=2, ensure_ascii=False))
        self.logger.info(f"Saved {report['suite']} report to {filepath}")
        return filepath

    def load(self, suite: str, preset: str) -> SuiteReport:
        filepath = self._filepath(suite, preset)
        try:
            with open(filepath, "r", encoding="utf-8") as file:
                return validate_report(json.load(file))
        except FileNotFoundError as e:
            self.logger.warning(f"No stored report for {suite}/{preset} - {e}")
            raise e

    def delete(self, suite: str, preset: str) -> None:
        filepath = self._filepath(suite, preset)
        try:
            os.remove(filepath)
        except FileNotFoundError as e:
            self.logger.warning(f"Failed to find report for {suite}/{preset} - {e}")
            raise e

    @staticmethod
    def _mkdir(path):
        if isinstance(path, str):
            path = Path(path)
        path.mkdir(parents=True, exist_ok=True)
