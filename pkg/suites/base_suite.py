# A base class for verification suites, defining the interface and common properties for subclasses.
#
# A suite splits its work into tasks: independent callables returning a list of
# check records. Tasks of one suite may run on a thread pool; the report keeps
# them in declaration order.

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple

from coisotropic import Params, SeriesType
from env_loader import Settings
from reports import CheckResult, SuiteReport, make_report

logger = logging.getLogger(__name__)

Task = Callable[[], List[CheckResult]]

ALL_SERIES = (SeriesType.RPLUS, SeriesType.S1, SeriesType.SPECIAL)


class SuiteNotApplicable(ValueError):
    pass


class BaseSuite(object):
    name: str = ""
    description: str = ""
    series_types: Tuple[SeriesType, ...] = ALL_SERIES

    def applies_to(self, p: Params) -> bool:
        return p.series_type in self.series_types

    def tasks(self, p: Params, settings: Settings) -> List[Task]:
        raise NotImplementedError("Subclass must implement tasks")

    def controls(self, p: Params, settings: Settings) -> List[Task]:
        raise NotImplementedError("Subclass must implement controls")

    def collect(self, p: Params, settings: Settings) -> List[CheckResult]:
        """
        Run every task and control of the suite.

        Raises:
            SuiteNotApplicable: when the suite does not cover the series type of p
        """
        if not self.applies_to(p):
            applicable = ", ".join(series.value for series in self.series_types)
            raise SuiteNotApplicable(f"suite {self.name} covers {applicable}, not {p.series_type.value} ({p.name})")
        tasks = self.tasks(p, settings) + self.controls(p, settings)
        logger.info(f"Running suite {self.name} on {p.name}: {len(tasks)} tasks, {settings.workers} workers")
        if settings.workers > 1:
            with ThreadPoolExecutor(max_workers=settings.workers) as executor:
                batches = list(executor.map(lambda task: task(), tasks))
        else:
            batches = [task() for task in tasks]
        checks = [check for batch in batches for check in batch]
        logger.info(f"Suite {self.name} finished with {len(checks)} checks")
        return checks

    def run(self, p: Params, settings: Settings) -> SuiteReport:
        return make_report(self.name, p.name, self.collect(p, settings))


def single(task: Callable[[], CheckResult]) -> Task:
    """Wrap a task producing one check record."""
    return lambda: [task()]
