# Membership in the sectors B_j = {x : (id (x) r) Delta x = x (x) v_j} and
# their left mirrors, decided by direct computation.

import logging
from itertools import product
from typing import List, Tuple

from scalars import rank
from pbw_algebra import AlgebraElement
from hopf_structure import TensorElement, coproduct
from reports import CheckResult, expect, run_check, run_control
from coisotropic import Params, Side, left_v_element, reduce_leg, v_element, w_word

from .z_space import ZGenerators, z_generators

logger = logging.getLogger(__name__)


def right_sector_difference(x: AlgebraElement, p: Params, j: int) -> TensorElement:
    """(id (x) r) Delta x - x (x) v_j."""
    x = AlgebraElement.coerce(x)
    reduced = reduce_leg(coproduct(x), 1, p, Side.RIGHT)
    return reduced - TensorElement.pure(x, v_element(j, p))


def left_sector_difference(x: AlgebraElement, p: Params, k: int) -> TensorElement:
    """(l (x) id) Delta x - l[w~_k] (x) x."""
    x = AlgebraElement.coerce(x)
    reduced = reduce_leg(coproduct(x), 0, p, Side.LEFT)
    return reduced - TensorElement.pure(left_v_element(k, p), x)


def is_right_sector(x: AlgebraElement, p: Params, j: int) -> bool:
    return not right_sector_difference(x, p, j)


def is_left_sector(x: AlgebraElement, p: Params, k: int) -> bool:
    return not left_sector_difference(x, p, k)


def z_monomials(zs: ZGenerators, max_degree: int) -> List[Tuple[str, AlgebraElement]]:
    """The ordered products z1^i z2^j z3^k with 0 < i + j + k <= max_degree, with their labels."""
    z1, z2, z3 = zs
    products = []
    for i, j, k in product(range(max_degree + 1), repeat=3):
        if 0 < i + j + k <= max_degree:
            products.append((f"z1^{i}z2^{j}z3^{k}", z1**i * z2**j * z3**k))
    return products


def coinvariance_checks(p: Params, max_degree: int) -> List[CheckResult]:
    """Every z-monomial up to max_degree is right coinvariant."""
    return [
        run_check(f"coinvariant-{label}", lambda x=x: right_sector_difference(x, p, 0))
        for label, x in z_monomials(z_generators(p), max_degree)
    ]


def coinvariance_control(p: Params) -> CheckResult:
    return run_control("coinvariant-b", lambda: right_sector_difference(AlgebraElement.generator("b"), p, 0))


def grading_checks(p: Params) -> List[CheckResult]:
    """x . w_(+-1) lies in the sector of w_(+-1) for x in {z1, z2, z3}."""
    checks = []
    for j in (1, -1):
        w = w_word(j, p)
        checks.append(run_check(f"sector-w{j}", lambda w=w, j=j: right_sector_difference(w, p, j)))
        for name, z in zip(("z1", "z2", "z3"), z_generators(p)):
            checks.append(
                run_check(f"sector-{name}w{j}", lambda z=z, w=w, j=j: right_sector_difference(z * w, p, j))
            )
    return checks


def double_coset_element(p: Params) -> AlgebraElement:
    """y = z2 + nu z3 - 2 mu z1."""
    z1, z2, z3 = z_generators(p)
    return z2 + z3 * p.nu - z1 * (p.mu * 2)


def double_coset_member(n: int, p: Params) -> List[CheckResult]:
    """y^n is both right and left coinvariant."""
    y_n = double_coset_element(p) ** n
    return [
        run_check(f"doublecoset-right-{n}", lambda: right_sector_difference(y_n, p, 0)),
        run_check(f"doublecoset-left-{n}", lambda: left_sector_difference(y_n, p, 0)),
    ]


def double_coset_rank(n_max: int, p: Params) -> int:
    y = double_coset_element(p)
    return rank([(y**n).terms for n in range(n_max + 1)])


def double_coset_rank_check(n_max: int, p: Params) -> CheckResult:
    def witness():
        found = double_coset_rank(n_max, p)
        return expect(found == n_max + 1, f"rank {found} < {n_max + 1}")

    return run_check(f"doublecoset-rank-{n_max}", witness)


def double_coset_control(p: Params) -> CheckResult:
    """c is not left coinvariant."""
    return run_control("doublecoset-left-c", lambda: left_sector_difference(AlgebraElement.generator("c"), p, 0))
