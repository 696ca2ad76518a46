# Check records for the statements about the quotient coalgebras: ideal
# annihilation, well-definedness of the induced maps, the group-like classes
# and the annihilators of v_n.

import logging
import random
from typing import List

from scalars import ONE, Scalar, q_pow, t_pow
from pbw_algebra import AlgebraElement, random_element, random_monomial
from hopf_structure import TensorElement, coproduct, tau
from reports import CheckResult, run_check, run_control

from .coideal import coideal_generators
from .grouplike import (
    downward_step_difference,
    left_v_element,
    linear_factor,
    module_d_difference,
    v_element,
    v_element_direct,
    vbva_differences,
    w_word,
)
from .params import Params
from .quotient import (
    Side,
    class_tensor,
    quotient_coproduct,
    quotient_counit,
    quotient_tau,
    reduce_element,
    reduce_leg,
)

logger = logging.getLogger(__name__)

A, B = AlgebraElement.generator("a"), AlgebraElement.generator("b")


class NonRealShiftedParameter(ValueError):
    pass


def shifted_mu(n: int, p: Params) -> Scalar:
    """mu_n = (q^n chi_+ + q^-n chi_-) / 2."""
    return (q_pow(n) * p.chi_plus + q_pow(-n) * p.chi_minus) / 2


def shifted_params(n: int, p: Params) -> Params:
    """
    The parameters (mu_n, nu) whose right ideal annihilates v_n.

    Raises:
        NonRealShiftedParameter: when mu_n is not fixed by conjugation (D > 0, n != 0)
    """
    mu_n = shifted_mu(n, p)
    if not mu_n.is_real():
        raise NonRealShiftedParameter(f"mu_{n} = {mu_n} is not real for {p}")
    return p.with_values(mu_n, p.nu, name=f"{p.name}[mu_{n}]")


def annihilator_check(n: int, p: Params) -> List[CheckResult]:
    """
    v_n . k = 0 in the quotient for both generators k of the coideal at (mu_n, nu).

    Raises:
        NonRealShiftedParameter: see shifted_params
    """
    shifted = coideal_generators(shifted_params(n, p))
    v_n = v_element(n, p)
    return [
        run_check(f"annihilator-{n}-k1", lambda: v_n * shifted.k1),
        run_check(f"annihilator-{n}-k2", lambda: v_n * shifted.k2),
    ]


def quadratic_element(p: Params) -> AlgebraElement:
    """a^2 + nu b^2 + 2 t^-1 mu a b, the element with r[.] = r[1]."""
    return A * A + B * B * p.nu + A * B * (t_pow(-1) * p.mu * 2)


def w_relation_difference(n: int, p: Params) -> AlgebraElement:
    """
    w_n (a + q^(-|n| + 1/2) chi_(-sigma) b) - (a^2 + nu b^2 + 2 t^-1 mu a b) w_(n - sigma)
    with sigma the sign of n; an identity in the algebra itself.
    """
    if n == 0:
        raise ValueError("the w relation needs n != 0")
    sigma = 1 if n > 0 else -1
    closing = linear_factor(t_pow(1 - 2 * abs(n)) * p.chi(-sigma))
    return w_word(n, p) * closing - quadratic_element(p) * w_word(n - sigma, p)


def w_relation_checks(n: int, p: Params) -> List[CheckResult]:
    """The w relation at n and at -n."""
    return [run_check(f"w-relation-{m}", lambda m=m: w_relation_difference(m, p)) for m in (n, -n)]


def expected_tau(n: int, p: Params):
    """tau fixes v_n when D < 0 and sends it to v_(-n) otherwise."""
    return v_element(n, p) if p.discriminant_sign < 0 else v_element(-n, p)


def grouplike_checks(n: int, p: Params) -> List[CheckResult]:
    v_n = v_element(n, p)
    return [
        run_check(f"coproduct-v{n}", lambda: quotient_coproduct(v_n) - class_tensor(v_n, v_n)),
        run_check(f"counit-v{n}", lambda: quotient_counit(v_n) - ONE),
        run_check(f"tau-v{n}", lambda: quotient_tau(v_n) - expected_tau(n, p)),
        run_check(f"direct-v{n}", lambda: v_n - v_element_direct(n, p)),
    ]


def left_grouplike_checks(n: int, p: Params) -> List[CheckResult]:
    v_n = left_v_element(n, p)
    return [
        run_check(f"left-coproduct-v{n}", lambda: quotient_coproduct(v_n) - class_tensor(v_n, v_n)),
        run_check(f"left-counit-v{n}", lambda: quotient_counit(v_n) - ONE),
    ]


def vbva_check(n: int, p: Params) -> CheckResult:
    """Both lines of the v_n . b and v_n . a relations."""

    def vbva_witness():
        b_line, a_line = vbva_differences(n, p)
        return b_line or a_line

    return run_check(f"vbva-{n}", vbva_witness)


def recursion_checks(n: int, p: Params) -> List[CheckResult]:
    """v_n . d and the recursion read against its build direction."""
    return [
        run_check(f"module-d-{n}", lambda: module_d_difference(n, p)),
        run_check(f"downward-{n}", lambda: downward_step_difference(n, p)),
    ]


def reduced_coproduct(x: AlgebraElement, p: Params, side: Side = Side.RIGHT) -> TensorElement:
    """(r (x) r) Delta x computed on an arbitrary representative."""
    tensor = coproduct(AlgebraElement.coerce(x))
    return reduce_leg(reduce_leg(tensor, 0, p, side), 1, p, side)


def _ideal_element(k: AlgebraElement, m: AlgebraElement, side: Side) -> AlgebraElement:
    return k * m if side == Side.RIGHT else m * k


def ideal_annihilation_witness(p: Params, samples: int, max_degree: int, seed: int = 0, side: Side = Side.RIGHT):
    """Sampled monomials m with r[k_i m] != 0 (or l[m k_i] != 0 on the left)."""
    rng = random.Random(seed)
    failures = []
    generators = coideal_generators(p)
    for _ in range(samples):
        m = AlgebraElement.monomial(random_monomial(rng, max_degree))
        for name, k in zip(("k1", "k2"), generators):
            reduced = reduce_element(_ideal_element(k, m, side), p, side)
            if reduced:
                failures.append(f"{name} with {m}: {reduced}")
    return failures


def well_definedness_witness(p: Params, samples: int, max_degree: int, seed: int = 0, side: Side = Side.RIGHT):
    """Sampled x, y with y in the ideal where Delta or tau of the class changes when y is added to x."""
    rng = random.Random(seed)
    failures = []
    generators = coideal_generators(p)
    for _ in range(samples):
        x = random_element(rng, max_degree)
        k = generators[rng.randrange(2)]
        y = _ideal_element(k, random_element(rng, max_degree - 1), side)
        delta_gap = reduced_coproduct(x + y, p, side) - reduced_coproduct(x, p, side)
        if delta_gap:
            failures.append(f"coproduct of {x} shifted by {y}: {delta_gap}")
        tau_gap = reduce_element(tau(x + y), p, side) - reduce_element(tau(x), p, side)
        if tau_gap:
            failures.append(f"tau of {x} shifted by {y}: {tau_gap}")
    return failures


def sampled_checks(p: Params, samples: int, max_degree: int, seed: int = 0) -> List[CheckResult]:
    checks = []
    for side in Side:
        checks.append(
            run_check(
                f"{side.value}-ideal-annihilation",
                lambda side=side: ideal_annihilation_witness(p, samples, max_degree, seed, side),
            )
        )
        checks.append(
            run_check(
                f"{side.value}-well-defined",
                lambda side=side: well_definedness_witness(p, max(1, samples // 2), max_degree, seed, side),
            )
        )
    return checks


def reduction_examples(p: Params) -> List[CheckResult]:
    """r[a^2 + nu b^2 + 2 t^-1 mu a b] = r[1], its left mirror, and r[c] = -q nu r[b]."""
    left_quadratic = A * A + B * B * (q_pow(2) * p.nu) + A * B * (t_pow(1) * p.mu * 2)
    right_one, left_one = (reduce_element(AlgebraElement.one(), p, side) for side in Side)

    def module_c_witness():
        reduced_c = reduce_element(AlgebraElement.generator("c"), p, Side.RIGHT)
        return reduced_c - reduce_element(B, p, Side.RIGHT) * (-q_pow(1) * p.nu)

    return [
        run_check("right-quadratic", lambda: reduce_element(quadratic_element(p), p, Side.RIGHT) - right_one),
        run_check("left-quadratic", lambda: reduce_element(left_quadratic, p, Side.LEFT) - left_one),
        run_check("right-module-c", module_c_witness),
    ]


def grouplike_control(p: Params) -> CheckResult:
    """r[a + 2 t chi_+ b] is not group-like."""

    def perturbed_witness():
        perturbed = reduce_element(linear_factor(t_pow(1) * p.chi_plus * 2), p, Side.RIGHT)
        return quotient_coproduct(perturbed) - class_tensor(perturbed, perturbed)

    return run_control("grouplike-perturbed-v1", perturbed_witness)
