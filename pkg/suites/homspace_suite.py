from typing import List

from homogeneous import (
    character_checks,
    coinvariance_checks,
    coinvariance_control,
    grading_checks,
    verify_z_structure,
    z_structure_control,
)

from .base_suite import BaseSuite, Task, single

CHARACTER_ALPHAS = ("2", "1/3")


class HomspaceSuite(BaseSuite):
    name = "homspace"
    description = "The right coinvariants z1, z2, z3, their relations and the sector grading"

    def tasks(self, p, settings) -> List[Task]:
        tasks = [
            lambda: verify_z_structure(p),
            lambda: coinvariance_checks(p, settings.degree_cap),
            lambda: grading_checks(p),
        ]
        tasks += [lambda alpha=alpha: character_checks(alpha, p) for alpha in CHARACTER_ALPHAS]
        return tasks

    def controls(self, p, settings) -> List[Task]:
        return [single(lambda: z_structure_control(p)), single(lambda: coinvariance_control(p))]
