# Characters of the homogeneous space and the comodule algebra maps they
# induce between homogeneous spaces of one family.

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from scalars import Scalar, q_pow, sqrt_of
from pbw_algebra import AlgebraElement, Monomial
from hopf_structure import NonRealCharacter, ZeroAlpha
from reports import CheckResult, expect, run_check
from coisotropic import Params

from .z_space import UNIT_KEY, Z_NAMES, z_coproduct_terms, z_generators

logger = logging.getLogger(__name__)


def homspace_character(alpha, p: Params) -> Dict[str, Scalar]:
    """
    The character g of the homogeneous space with g(z1) = 0, g(z2) = alpha nu, g(z3) = 1/alpha.

    Raises:
        ZeroAlpha: when alpha is zero
        NonRealCharacter: when alpha is not fixed by the conjugation
    """
    alpha = Scalar.coerce(alpha)
    if not alpha:
        raise ZeroAlpha("a homogeneous space character needs alpha != 0")
    if not alpha.is_real():
        raise NonRealCharacter(f"alpha = {alpha} is not real")
    return {UNIT_KEY: Scalar(1), "z1": Scalar(), "z2": alpha * p.nu, "z3": alpha.inverse()}


def character_relation_differences(alpha, p: Params) -> Dict[str, Scalar]:
    """The three z relations with the character values substituted."""
    g = homspace_character(alpha, p)
    g1, g2, g3 = g["z1"], g["z2"], g["z3"]
    return {
        "character-comm-12": g1 * g2 - q_pow(2) * g2 * g1,
        "character-comm-13": g1 * g3 - q_pow(-2) * g3 * g1,
        "character-quad": g3 * g2 - (p.nu + q_pow(2) * g1 * g1 + p.mu * q_pow(1) * 2 * g1),
    }


def character_checks(alpha, p: Params) -> List[CheckResult]:
    differences = character_relation_differences(alpha, p)
    return [run_check(check_id, lambda check_id=check_id: differences[check_id]) for check_id in differences]


def translated_generator(name: str, alpha, p: Params) -> AlgebraElement:
    """(id (x) g) Delta z_name, evaluated through the coproduct expansion of z_name."""
    g = homspace_character(alpha, p)
    result = AlgebraElement.zero()
    for left, key in z_coproduct_terms(p)[name]:
        result = result + left * g[key]
    return result


# the monomials carrying the scale and the mu and nu terms of each z_i
_LEADING = {"z1": Monomial(1, 0, 1, 0), "z2": Monomial(0, 0, 2, 0), "z3": Monomial(2, 0, 0, 0)}
_MU_TERM = {"z1": Monomial(0, 1, 1, 0), "z2": Monomial(0, 0, 1, 1), "z3": Monomial(1, 1, 0, 0)}
_NU_TERM = {"z1": Monomial(0, 1, 0, 1), "z2": Monomial(0, 0, 0, 2), "z3": Monomial(0, 2, 0, 0)}


@dataclass(frozen=True)
class Rescaling:
    """image = factor * z_name[lam mu, lam^2 nu]."""

    name: str
    factor: Scalar
    lam: Optional[Scalar]

    def __str__(self):
        return f"{self.name}: factor {self.factor}, lambda {self.lam}"


def fit_rescaling(name: str, image: AlgebraElement, p: Params) -> Rescaling:
    """
    Read factor and lambda off the image of z_name.

    lambda comes from the mu term when mu != 0, otherwise from the nu term up to
    sign (the family only depends on lambda^2 then).
    """
    reference = getattr(z_generators(p), name)
    factor = image.coefficient(_LEADING[name]) / reference.coefficient(_LEADING[name])
    if not factor:
        return Rescaling(name, factor, None)
    if p.mu:
        lam = image.coefficient(_MU_TERM[name]) / (factor * reference.coefficient(_MU_TERM[name]))
        return Rescaling(name, factor, lam)
    if p.nu:
        lam_squared = image.coefficient(_NU_TERM[name]) / (factor * reference.coefficient(_NU_TERM[name]))
        try:
            return Rescaling(name, factor, sqrt_of(lam_squared.as_rational()))
        except ValueError:
            return Rescaling(name, factor, None)
    return Rescaling(name, factor, Scalar(1))


def rescaled_params(lam: Scalar, p: Params) -> Params:
    return p.with_values(lam * p.mu, lam * lam * p.nu, name=f"{p.name}[lambda={lam}]")


def rescaling_witness(name: str, alpha, p: Params):
    """None when (id (x) g) Delta z_name is a multiple of z_name in the rescaled family."""
    image = translated_generator(name, alpha, p)
    fit = fit_rescaling(name, image, p)
    if fit.lam is None:
        return f"{name}: no rescaling fits {image}"
    expected = getattr(z_generators(rescaled_params(fit.lam, p)), name) * fit.factor
    difference = image - expected
    if difference:
        return f"{fit}: {difference}"
    logger.info(f"rescale {fit} for alpha = {alpha}")
    return None


def rescale_homspace(alpha, p: Params) -> List[CheckResult]:
    """
    Check that (id (x) g) Delta maps each z_i onto a multiple of z_i for (lam mu, lam^2 nu),
    with one lam and one factor for all three generators.
    """
    checks = [run_check(f"rescale-{name}", lambda name=name: rescaling_witness(name, alpha, p)) for name in Z_NAMES]

    def consistency_witness():
        found = rescale_factors(alpha, p)
        factors = {str(fit.factor) for fit in found}
        squares = {str(fit.lam * fit.lam) for fit in found if fit.lam is not None}
        return expect(len(factors) == 1 and len(squares) == 1, "; ".join(str(fit) for fit in found))

    checks.append(run_check("rescale-family", consistency_witness))
    return checks


def rescale_factors(alpha, p: Params) -> List[Rescaling]:
    return [fit_rescaling(name, translated_generator(name, alpha, p), p) for name in Z_NAMES]

