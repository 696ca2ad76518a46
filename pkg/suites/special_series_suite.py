from typing import List

from coisotropic import (
    SeriesType,
    coproduct_component_difference,
    quotient_tau,
    same_span,
    series_rank,
    truncated_spans,
    v_element,
    x_coproduct_difference,
    x_element,
    x_recursion_difference,
    x_tau_difference,
    x_three_term_difference,
)
from reports import CheckResult, expect, run_check, run_control

from .base_suite import BaseSuite, Task, single


def _x_checks(n: int, p) -> List[CheckResult]:
    def component_witness():
        v_part, x_part = coproduct_component_difference(n, p)
        return v_part or x_part

    return [
        run_check(f"coproduct-x{n}", lambda: x_coproduct_difference(n, p)),
        run_check(f"tau-x{n}", lambda: x_tau_difference(n, p)),
        run_check(f"recursion-x{n}", lambda: x_recursion_difference(n, p)),
        run_check(f"three-term-x{n}", lambda: x_three_term_difference(n, p)),
        run_check(f"component-{n}", component_witness),
    ]


def _rank_checks(n_max: int, p) -> List[CheckResult]:
    def rank_witness():
        found = series_rank(n_max, p)
        return expect(found == 2 * n_max + 1, f"rank {found} != {2 * n_max + 1}")

    return [
        run_check(f"rank-{n_max}", rank_witness),
        run_check(f"span-{n_max}", lambda: expect(same_span(*truncated_spans(n_max, p)), "spans differ")),
    ]


def _tau_control_witness(p):
    # tau(X_1 + v_0) = -(X_1 + v_0) fails since v_0 is fixed by tau
    y = x_element(1, p) + v_element(0, p)
    return quotient_tau(y) + y


class SpecialSeriesSuite(BaseSuite):
    name = "special-series"
    description = "The skew-primitive classes X_n of the special series"
    series_types = (SeriesType.SPECIAL,)

    def tasks(self, p, settings) -> List[Task]:
        tasks = [lambda n=n: _x_checks(n, p) for n in range(1, settings.max_n + 1)]
        tasks.append(lambda: _rank_checks(settings.max_n, p))
        return tasks

    def controls(self, p, settings) -> List[Task]:
        return [single(lambda: run_control("tau-x1-plus-v0", lambda: _tau_control_witness(p)))]
