from typing import List

from coisotropic import coideal_checks, coideal_control, reduction_examples, sampled_checks

from .base_suite import BaseSuite, Task, single


class CoidealSuite(BaseSuite):
    name = "coideal"
    description = "The coideal generators, the quotient reduction and its well-definedness"

    def tasks(self, p, settings) -> List[Task]:
        return [
            lambda: coideal_checks(p),
            lambda: reduction_examples(p),
            lambda: sampled_checks(p, settings.samples, settings.degree_cap, settings.seed),
        ]

    def controls(self, p, settings) -> List[Task]:
        return [single(lambda: coideal_control(p))]
