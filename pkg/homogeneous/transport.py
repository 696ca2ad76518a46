# Transport of the coideal, its quotient and its coinvariants by the adjoint
# action of a character g_alpha: (mu, nu) -> (mu / alpha^2, nu / alpha^4).

import logging
import random
from typing import List, Optional

from scalars import Scalar, solve_in_span
from pbw_algebra import AlgebraElement, random_monomial
from hopf_structure import Character, adjoint_action, tau
from reports import CheckResult, run_check
from coisotropic import Params, coideal_generators, right_reduce

from .sectors import right_sector_difference
from .z_space import Z_NAMES, z_generators

logger = logging.getLogger(__name__)


def transported_params(alpha, p: Params) -> Params:
    alpha = Scalar.coerce(alpha)
    return p.with_values(p.mu / alpha**2, p.nu / alpha**4, name=f"{p.name}[alpha={alpha}]")


def coideal_coordinates(x: AlgebraElement, p: Params) -> Optional[List[Scalar]]:
    """Coefficients of x on (k1, k2) at p, or None when x is outside their span."""
    return solve_in_span(x.terms, [k.terms for k in coideal_generators(p)])


def ad_transport_check(alpha, p: Params, samples: int = 10, max_degree: int = 2, seed: int = 0) -> List[CheckResult]:
    """
    Ad_(g_alpha) maps the coideal at (mu, nu) into the coideal at (mu / alpha^2, nu / alpha^4),
    commutes with tau, maps coinvariants to coinvariants and the right ideal into the right ideal.

    Raises:
        ZeroAlpha: when alpha is zero
        NonRealCharacter: when alpha is not real
    """
    g = Character(alpha)
    target = transported_params(g.alpha, p)
    generators = coideal_generators(p)
    checks = []
    for name, k in zip(("k1", "k2"), generators):

        def span_witness(k=k, name=name):
            image = adjoint_action(g, k)
            coordinates = coideal_coordinates(image, target)
            if coordinates is None:
                return f"Ad({name}) = {image} is outside the coideal at {target}"
            logger.info(f"Ad({name}) = ({coordinates[0]}) k1' + ({coordinates[1]}) k2' for alpha = {g.alpha}")
            return None

        checks.append(run_check(f"ad-{name}", span_witness))
        checks.append(run_check(f"ad-tau-{name}", lambda k=k: adjoint_action(g, tau(k)) - tau(adjoint_action(g, k))))

    for name, z in zip(Z_NAMES, z_generators(p)):
        checks.append(
            run_check(f"ad-coinvariant-{name}", lambda z=z: right_sector_difference(adjoint_action(g, z), target, 0))
        )

    def ideal_witness():
        rng = random.Random(seed)
        failures = []
        for _ in range(samples):
            m = AlgebraElement.monomial(random_monomial(rng, max_degree))
            for name, k in zip(("k1", "k2"), generators):
                reduced = right_reduce(adjoint_action(g, k * m), target)
                if reduced:
                    failures.append(f"Ad({name} {m}): {reduced}")
        return failures

    checks.append(run_check("ad-ideal", ideal_witness))
    return checks


def ad_factors(alpha, p: Params) -> List[Optional[List[Scalar]]]:
    """The coordinates of Ad(k1), Ad(k2) on the transported generators."""
    g = Character(alpha)
    target = transported_params(g.alpha, p)
    return [coideal_coordinates(adjoint_action(g, k), target) for k in coideal_generators(p)]
