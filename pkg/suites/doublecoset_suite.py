from typing import List

from homogeneous import double_coset_control, double_coset_member, double_coset_rank_check

from .base_suite import BaseSuite, Task, single

DOUBLE_COSET_MAX_N = 2


class DoubleCosetSuite(BaseSuite):
    name = "doublecoset"
    description = "Powers of z2 + nu z3 - 2 mu z1 are left and right coinvariant"

    def tasks(self, p, settings) -> List[Task]:
        n_max = min(settings.max_n, DOUBLE_COSET_MAX_N)
        tasks = [lambda n=n: double_coset_member(n, p) for n in range(n_max + 1)]
        tasks.append(single(lambda: double_coset_rank_check(n_max, p)))
        return tasks

    def controls(self, p, settings) -> List[Task]:
        return [single(lambda: double_coset_control(p))]
