from typing import List

from coisotropic import SeriesType, classical_limit_check, non_divisible_coefficients, v_element
from reports import run_control

from .base_suite import BaseSuite, Task, single

CLASSICAL_MAX_N = 2


class ClassicalLimitSuite(BaseSuite):
    name = "classical-limit"
    description = "Divisibility by q - q^-1 of the differences that vanish at q = 1"
    series_types = (SeriesType.SPECIAL,)

    def tasks(self, p, settings) -> List[Task]:
        return [lambda n=n: classical_limit_check(n, p) for n in range(1, min(settings.max_n, CLASSICAL_MAX_N) + 1)]

    def controls(self, p, settings) -> List[Task]:
        def undivided_witness():
            return non_divisible_coefficients(v_element(1, p) - v_element(0, p))

        return [single(lambda: run_control("divisible-v1-v0", undivided_witness))]
