import logging
from typing import List, NamedTuple, Optional

from scalars import q_pow, t_pow
from pbw_algebra import AlgebraElement
from hopf_structure import TensorElement, coproduct, counit, tau
from reports import CheckResult, run_check, run_control

from .params import Params

logger = logging.getLogger(__name__)

A, B, C, D = (AlgebraElement.generator(name) for name in "abcd")


class CoidealGenerators(NamedTuple):
    k1: AlgebraElement
    k2: AlgebraElement


def coideal_generators(p: Params) -> CoidealGenerators:
    """k1 = a - d + 2 t mu b and k2 = q nu b + c."""
    k1 = A - D + B * (t_pow(1) * p.mu * 2)
    k2 = B * (q_pow(1) * p.nu) + C
    return CoidealGenerators(k1, k2)


def _pure(left: AlgebraElement, right: AlgebraElement) -> TensorElement:
    return TensorElement.pure(left, right)


def expected_coproducts(p: Params, generators: CoidealGenerators) -> CoidealGenerators:
    """
    The two expansions exhibiting Delta(k_i) in C (x) A + A (x) C:

        Delta k1 = k1 (x) (a + 2 t mu b) + (d - 2 t mu b) (x) k1 + b (x) k2 - k2 (x) b
        Delta k2 = (a + 2 t mu b) (x) k2 + k2 (x) (d - 2 t mu b) - k1 (x) c + c (x) k1
    """
    k1, k2 = generators
    shift = B * (t_pow(1) * p.mu * 2)
    a_shifted, d_shifted = A + shift, D - shift
    delta_k1 = _pure(k1, a_shifted) + _pure(d_shifted, k1) + _pure(B, k2) - _pure(k2, B)
    delta_k2 = _pure(a_shifted, k2) + _pure(k2, d_shifted) - _pure(k1, C) + _pure(C, k1)
    return CoidealGenerators(delta_k1, delta_k2)


def coideal_checks(p: Params, generators: Optional[CoidealGenerators] = None, prefix: str = "") -> List[CheckResult]:
    """
    Verify that C = span{k1, k2} is a tau-invariant two-sided coideal.

    Args:
        p: The parameters
        generators: Override the generators (used by negative controls)
        prefix: Prepended to every check id

    Returns:
        One check record per identity
    """
    generators = generators or coideal_generators(p)
    k1, k2 = generators
    expected = expected_coproducts(p, generators)
    return [
        run_check(f"{prefix}counit-k1", lambda: counit(k1)),
        run_check(f"{prefix}counit-k2", lambda: counit(k2)),
        run_check(f"{prefix}tau-k1", lambda: tau(k1) + k1),
        run_check(f"{prefix}tau-k2", lambda: tau(k2) + k2 * q_pow(-1)),
        run_check(f"{prefix}coproduct-k1", lambda: coproduct(k1) - expected.k1),
        run_check(f"{prefix}coproduct-k2", lambda: coproduct(k2) - expected.k2),
    ]


def coideal_check(p: Params, generators: Optional[CoidealGenerators] = None) -> List[CheckResult]:
    return coideal_checks(p, generators)


def perturbed_generators(p: Params) -> CoidealGenerators:
    """k2' = q nu b + 2c in place of k2."""
    k1, _ = coideal_generators(p)
    return CoidealGenerators(k1, B * (q_pow(1) * p.nu) + C * 2)


def coideal_control(p: Params) -> CheckResult:
    def perturbed_witness():
        generators = perturbed_generators(p)
        return coproduct(generators.k2) - expected_coproducts(p, generators).k2

    return run_control("coproduct-perturbed-k2", perturbed_witness)
