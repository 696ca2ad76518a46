# The generators z1, z2, z3 of the homogeneous space of right coinvariants,
# their commutation relations and their coproducts.

import logging
from typing import Dict, List, NamedTuple, Optional, Tuple

from scalars import q_number, q_pow, t_pow
from pbw_algebra import AlgebraElement, star
from hopf_structure import TensorElement, coproduct
from reports import CheckResult, run_check, run_control
from coisotropic import Params

logger = logging.getLogger(__name__)

A, B, C, D = (AlgebraElement.generator(name) for name in "abcd")

UNIT_KEY = "1"
Z_NAMES = ("z1", "z2", "z3")


class ZGenerators(NamedTuple):
    z1: AlgebraElement
    z2: AlgebraElement
    z3: AlgebraElement

    def by_key(self, key: str) -> AlgebraElement:
        return AlgebraElement.one() if key == UNIT_KEY else getattr(self, key)


def z_generators(p: Params) -> ZGenerators:
    """
    z1 = t^-1 (a c + nu b d) + 2 mu b c
    z2 = c^2 + nu d^2 + 2 mu t^-1 c d
    z3 = a^2 + nu b^2 + 2 mu t^-1 a b
    """
    mu, nu = p.mu, p.nu
    z1 = (A * C + B * D * nu) * t_pow(-1) + B * C * (mu * 2)
    z2 = C * C + D * D * nu + C * D * (mu * t_pow(-1) * 2)
    z3 = A * A + B * B * nu + A * B * (mu * t_pow(-1) * 2)
    return ZGenerators(z1, z2, z3)


# Delta z_i = sum left (x) z_key over the listed (left, key) pairs
CoproductTerms = List[Tuple[AlgebraElement, str]]


def z_coproduct_terms(p: Params) -> Dict[str, CoproductTerms]:
    """
    Delta z1 = (1 + [2] b c) (x) z1 + t^-1 b d (x) z2 + t^-1 a c (x) z3 + 2 mu b c (x) 1
    Delta z2 = t^-1 [2] c d (x) z1 + d^2 (x) z2 + c^2 (x) z3 + 2 mu t^-1 c d (x) 1
    Delta z3 = t^-1 [2] a b (x) z1 + b^2 (x) z2 + a^2 (x) z3 + 2 mu t^-1 a b (x) 1
    """
    two = q_number(2)
    mu_term = p.mu * t_pow(-1) * 2
    return {
        "z1": [
            (AlgebraElement.one() + B * C * two, "z1"),
            (B * D * t_pow(-1), "z2"),
            (A * C * t_pow(-1), "z3"),
            (B * C * (p.mu * 2), UNIT_KEY),
        ],
        "z2": [
            (C * D * (t_pow(-1) * two), "z1"),
            (D * D, "z2"),
            (C * C, "z3"),
            (C * D * mu_term, UNIT_KEY),
        ],
        "z3": [
            (A * B * (t_pow(-1) * two), "z1"),
            (B * B, "z2"),
            (A * A, "z3"),
            (A * B * mu_term, UNIT_KEY),
        ],
    }


def expected_z_coproduct(name: str, p: Params, zs: Optional[ZGenerators] = None) -> TensorElement:
    zs = zs or z_generators(p)
    result = TensorElement.zero()
    for left, key in z_coproduct_terms(p)[name]:
        result = result + TensorElement.pure(left, zs.by_key(key))
    return result


def commutation_differences(p: Params, zs: Optional[ZGenerators] = None) -> Dict[str, AlgebraElement]:
    """
    z1 z2 - q^2 z2 z1, z1 z3 - q^-2 z3 z1 and z3 z2 - (nu + q^2 z1^2 + 2 mu q z1).
    """
    z1, z2, z3 = zs or z_generators(p)
    return {
        "z-comm-12": z1 * z2 - z2 * z1 * q_pow(2),
        "z-comm-13": z1 * z3 - z3 * z1 * q_pow(-2),
        "z-quad": z3 * z2 - (z1 * z1 * q_pow(2) + z1 * (p.mu * q_pow(1) * 2) + p.nu),
    }


def verify_z_structure(p: Params, zs: Optional[ZGenerators] = None) -> List[CheckResult]:
    """
    The three relations among z1, z2, z3, their displayed coproducts and their reality.

    Args:
        p: The parameters
        zs: Override the generators (used by negative controls)

    Returns:
        One check record per identity
    """
    zs = zs or z_generators(p)
    checks = [
        run_check(check_id, lambda check_id=check_id: commutation_differences(p, zs)[check_id])
        for check_id in ("z-comm-12", "z-comm-13", "z-quad")
    ]
    for name in Z_NAMES:
        z = getattr(zs, name)
        checks.append(
            run_check(f"coproduct-{name}", lambda name=name, z=z: coproduct(z) - expected_z_coproduct(name, p, zs))
        )
    for name in Z_NAMES:
        z = getattr(zs, name)
        checks.append(run_check(f"real-{name}", lambda z=z: star(z) - z))
    return checks


def perturbed_z_generators(p: Params) -> ZGenerators:
    """z2' = z2 + b."""
    z1, z2, z3 = z_generators(p)
    return ZGenerators(z1, z2 + B, z3)


def z_structure_control(p: Params) -> CheckResult:
    zs = perturbed_z_generators(p)
    return run_control("z-comm-12-perturbed", lambda: commutation_differences(p, zs)["z-comm-12"])
