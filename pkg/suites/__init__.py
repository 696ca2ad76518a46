from typing import Dict, List

from coisotropic import Params
from env_loader import Settings
from reports import SuiteReport

from .base_suite import BaseSuite, SuiteNotApplicable, Task
from .hopf_suite import HopfSuite
from .pbw_suite import PbwSuite
from .coideal_suite import CoidealSuite
from .grouplike_suite import GrouplikeSuite
from .expansion_suite import ExpansionSuite
from .special_series_suite import SpecialSeriesSuite
from .classical_limit_suite import ClassicalLimitSuite
from .homspace_suite import HomspaceSuite
from .doublecoset_suite import DoubleCosetSuite
from .adjoint_suite import AdjointSuite
from .all_suite import AllSuite

"""
New verification suites must be added below.
`get_available_suites()`
This function returns every suite by name, in the order `verify all` runs them.
`_get_suite()`
This function returns an instance of the suite with the given name.
`run_suite()`
This function looks the suite up by name and runs it on the given parameters.
"""


class UnknownSuite(ValueError):
    pass


def _individual_suites() -> List[BaseSuite]:
    return [
        HopfSuite(),
        PbwSuite(),
        CoidealSuite(),
        GrouplikeSuite(),
        ExpansionSuite(),
        SpecialSeriesSuite(),
        ClassicalLimitSuite(),
        HomspaceSuite(),
        DoubleCosetSuite(),
        AdjointSuite(),
    ]


def get_available_suites() -> Dict[str, BaseSuite]:
    suites = _individual_suites()
    available = {suite.name: suite for suite in suites}
    available["all"] = AllSuite(suites)
    return available


def _get_suite(suite_name: str) -> BaseSuite:
    try:
        return get_available_suites()[suite_name.lower()]
    except KeyError:
        raise UnknownSuite(f"Unknown suite: {suite_name} (expected one of {', '.join(get_available_suites())})")


def run_suite(suite_name: str, p: Params, settings: Settings) -> SuiteReport:
    suite = _get_suite(suite_name)
    return suite.run(p, settings)


__all__ = [
    "AllSuite",
    "BaseSuite",
    "SuiteNotApplicable",
    "Task",
    "UnknownSuite",
    "get_available_suites",
    "run_suite",
]
