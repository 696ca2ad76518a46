import random
from typing import List

from pbw_algebra import AlgebraElement, random_element
from hopf_structure import antipode, antipode_axiom_difference, hopf_axiom_differences
from reports import run_control, run_difference_checks

from .base_suite import BaseSuite, Task, single

B = AlgebraElement.generator("b")


def _antipode_with_wrong_sign_on_b(x: AlgebraElement) -> AlgebraElement:
    # S'(b) = -S(b), S' = S elsewhere
    image = antipode(x)
    return -image if x == B else image


class HopfSuite(BaseSuite):
    name = "hopf"
    description = "Hopf *-algebra axioms on the generators and on random elements"

    def tasks(self, p, settings) -> List[Task]:
        elements = [(name, AlgebraElement.generator(name)) for name in "abcd"]
        rng = random.Random(settings.seed)
        elements += [(f"random-{i}", random_element(rng, settings.degree_cap)) for i in range(settings.samples)]
        return [
            lambda label=label, x=x: run_difference_checks(lambda: hopf_axiom_differences(x), f"-{label}")
            for label, x in elements
        ]

    def controls(self, p, settings) -> List[Task]:
        def wrong_antipode_witness():
            return antipode_axiom_difference(B, _antipode_with_wrong_sign_on_b)

        return [single(lambda: run_control("antipode-wrong-sign-b", wrong_antipode_witness))]
