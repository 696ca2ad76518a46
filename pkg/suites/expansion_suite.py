from typing import List

from coisotropic import (
    Expansion,
    SeriesType,
    ab_residual,
    expansion_coefficient,
    expansion_residual,
    spanning_coordinates,
    vbva_check,
)
from reports import CheckResult, expect, run_check, run_control

from .base_suite import BaseSuite, Task, single


def _expansion_checks(s: int, p) -> List[CheckResult]:
    def spanning_witness():
        b_coordinates, ab_coordinates = spanning_coordinates(s, p)
        inside = b_coordinates is not None and ab_coordinates is not None
        return expect(inside, f"r[b^{s}] or r[a b^{s}] leaves the span of v_k, |k| <= {s + 1}")

    return [
        run_check(f"expansion-b{s}", lambda: expansion_residual(s, p)),
        run_check(f"expansion-ab{s}", lambda: ab_residual(s, p)),
        run_check(f"spanning-{s}", spanning_witness),
    ]


def _perturbed_expansion_witness(p):
    # C^1_0 doubled
    coefficients = {k: expansion_coefficient(1, k, p) for k in range(2)}
    coefficients[0] = coefficients[0] * 2
    return expansion_residual(1, p, Expansion(1, coefficients))


class ExpansionSuite(BaseSuite):
    name = "expansion"
    description = "r[b^s] on the group-like classes and the v_n . b, v_n . a relations"
    series_types = (SeriesType.RPLUS, SeriesType.S1)

    def tasks(self, p, settings) -> List[Task]:
        tasks = [lambda s=s: _expansion_checks(s, p) for s in range(settings.max_n + 1)]
        tasks += [single(lambda n=n: vbva_check(n, p)) for n in range(-settings.max_n, settings.max_n + 1)]
        return tasks

    def controls(self, p, settings) -> List[Task]:
        return [single(lambda: run_control("expansion-perturbed-b1", lambda: _perturbed_expansion_witness(p)))]
