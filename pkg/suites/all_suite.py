from typing import List

from reports import CheckResult

from .base_suite import ALL_SERIES, BaseSuite, Task


def _prefixed(suite_name: str, task: Task) -> Task:
    def run() -> List[CheckResult]:
        return [CheckResult(**{**check, "id": f"{suite_name}:{check['id']}"}) for check in task()]

    return run


class AllSuite(BaseSuite):
    """Every suite applicable to the parameters, check ids prefixed by the suite name."""

    name = "all"
    description = "Every applicable suite"
    series_types = ALL_SERIES

    def __init__(self, suites: List[BaseSuite]):
        self.suites = suites

    def applicable(self, p) -> List[BaseSuite]:
        return [suite for suite in self.suites if suite.applies_to(p)]

    def tasks(self, p, settings) -> List[Task]:
        tasks = []
        for suite in self.applicable(p):
            tasks += [_prefixed(suite.name, task) for task in suite.tasks(p, settings) + suite.controls(p, settings)]
        return tasks

    def controls(self, p, settings) -> List[Task]:
        return []
