from typing import List

from coisotropic import grouplike_checks, grouplike_control, left_grouplike_checks, recursion_checks, w_relation_checks

from .base_suite import BaseSuite, Task, single

LEFT_MAX_N = 3


class GrouplikeSuite(BaseSuite):
    name = "grouplike"
    description = "The group-like classes v_n, their recursion and the left mirror"

    def tasks(self, p, settings) -> List[Task]:
        indices = range(-settings.max_n, settings.max_n + 1)
        tasks = [lambda n=n: grouplike_checks(n, p) + recursion_checks(n, p) for n in indices]
        tasks += [lambda n=n: left_grouplike_checks(n, p) for n in indices if abs(n) <= LEFT_MAX_N]
        tasks += [lambda n=n: w_relation_checks(n, p) for n in range(1, settings.max_n + 1)]
        return tasks

    def controls(self, p, settings) -> List[Task]:
        return [single(lambda: grouplike_control(p))]
