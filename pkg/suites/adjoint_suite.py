import random
from typing import List

from scalars import Scalar
from pbw_algebra import random_element
from hopf_structure import Character, adjoint_action, adjoint_differences, adjoint_generator_differences
from coisotropic import annihilator_check, coideal_generators
from homogeneous import ad_transport_check, coideal_coordinates, rescale_homspace
from reports import CheckResult, expect, run_control, run_difference_checks

from .base_suite import BaseSuite, Task, single

ALPHAS = ("2", "1/3")
ANNIHILATOR_MAX_N = 2


def _adjoint_property_checks(alpha: str, settings) -> List[CheckResult]:
    g = Character(Scalar.from_rational(alpha))
    rng = random.Random(settings.seed)
    max_degree = max(1, settings.degree_cap - 1)
    checks = run_difference_checks(lambda: adjoint_generator_differences(g), f"-alpha={alpha}")
    for i in range(max(1, settings.samples // 4)):
        x, y = random_element(rng, max_degree), random_element(rng, max_degree)
        checks += run_difference_checks(lambda x=x, y=y: adjoint_differences(g, x, y), f"-alpha={alpha}-{i}")
    return checks


def wrong_transport_target(p, alpha):
    """
    Parameters next to the transported (mu / alpha^2, nu / alpha^4) whose discriminant is D / alpha^4
    times a square, so they stay in the coefficient field of p.
    """
    mu, nu = p.mu / alpha**2, p.nu / alpha**4
    if not p.discriminant:
        return p.with_values(-mu, nu, name=f"{p.name}[wrong mu]")
    return p.with_values(mu, 4 * nu - 3 * mu * mu, name=f"{p.name}[wrong nu]")


def _wrong_target_witness(p):
    g = Character(Scalar.from_rational(ALPHAS[0]))
    wrong = wrong_transport_target(p, g.alpha)
    image = adjoint_action(g, coideal_generators(p).k2)
    return expect(coideal_coordinates(image, wrong) is not None, f"Ad(k2) = {image} is outside the coideal at {wrong}")


class AdjointSuite(BaseSuite):
    name = "adjoint"
    description = "Transport of coideals and coinvariants by Ad_g, the rescaling maps and the annihilators of v_n"

    def tasks(self, p, settings) -> List[Task]:
        tasks = []
        for alpha in ALPHAS:
            tasks.append(
                lambda alpha=alpha: ad_transport_check(
                    alpha, p, samples=max(1, settings.samples // 2), max_degree=2, seed=settings.seed
                )
            )
            tasks.append(lambda alpha=alpha: rescale_homspace(alpha, p))
            tasks.append(lambda alpha=alpha: _adjoint_property_checks(alpha, settings))
        if p.discriminant_sign <= 0:
            tasks += [lambda n=n: annihilator_check(n, p) for n in range(ANNIHILATOR_MAX_N + 1)]
        return tasks

    def controls(self, p, settings) -> List[Task]:
        return [single(lambda: run_control("ad-k2-wrong-nu", lambda: _wrong_target_witness(p)))]
