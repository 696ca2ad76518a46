# The special series mu^2 = nu: the group-like classes v_n together with the
# skew-primitive classes X_n span the quotient coalgebra.

import logging
from functools import lru_cache
from typing import List

from scalars import Scalar, divides_laurent, q_factorial, q_number, q_pow, rank, t_pow
from pbw_algebra import AlgebraElement, Monomial
from reports import run_check

from .grouplike import v_element
from .params import Params
from .quotient import QuotientElement, quotient_coproduct, quotient_tau, class_tensor

logger = logging.getLogger(__name__)

A, B, D = (AlgebraElement.generator(name) for name in "abd")
Q_GAP = q_pow(1) - q_pow(-1)


class NotSpecialSeries(ValueError):
    pass


def _require_special(p: Params) -> None:
    if not p.is_special:
        raise NotSpecialSeries(f"{p} is not in the special series (mu^2 != nu)")


def _b_power(i: int) -> AlgebraElement:
    return AlgebraElement.monomial(Monomial(0, i, 0, 0))


def x_coefficient(n: int, i: int, p: Params) -> Scalar:
    """(q - q^-1)^(i-1) t^i mu^i [n-1]! / ([i] [n-i]!)."""
    return Q_GAP ** (i - 1) * t_pow(i) * p.mu**i * q_factorial(n - 1) / (q_number(i) * q_factorial(n - i))


@lru_cache(maxsize=None)
def x_element(n: int, p: Params) -> QuotientElement:
    """
    X_n = sum_{i=1..n} x_coefficient(n, i) v_(n-i) . b^i; X_0 is the zero class.

    Raises:
        NotSpecialSeries: unless mu^2 = nu
    """
    _require_special(p)
    if n < 0:
        raise ValueError(f"X_n needs n >= 0, got {n}")
    total = QuotientElement({}, p)
    for i in range(1, n + 1):
        total = total + v_element(n - i, p) * _b_power(i) * x_coefficient(n, i, p)
    return total


def x_coproduct_difference(n: int, p: Params):
    """Delta X_n - (X_n (x) v_n + v_n (x) X_n)."""
    x_n, v_n = x_element(n, p), v_element(n, p)
    return quotient_coproduct(x_n) - (class_tensor(x_n, v_n) + class_tensor(v_n, x_n))


def x_tau_difference(n: int, p: Params) -> QuotientElement:
    x_n = x_element(n, p)
    return quotient_tau(x_n) + x_n


def x_recursion_difference(n: int, p: Params) -> QuotientElement:
    """X_n . (q^-n a - q^n d + 2 t mu b) + [n+1] (q - q^-1) X_(n+1)."""
    factor = A * q_pow(-n) - D * q_pow(n) + B * (t_pow(1) * p.mu * 2)
    return x_element(n, p) * factor + x_element(n + 1, p) * (q_number(n + 1) * Q_GAP)


def x_three_term_difference(n: int, p: Params) -> QuotientElement:
    """
    t mu (q^n - q^-n) X_n . b
      - ([n+1]/[n] X_(n+1) - [n-1]/[n] X_(n-1) - t mu (q^n + q^-n)/[n] v_n . b).
    """
    t_mu = t_pow(1) * p.mu
    left = x_element(n, p) * B * (t_mu * (q_pow(n) - q_pow(-n)))
    bracket = q_number(n)
    right = (
        x_element(n + 1, p) * (q_number(n + 1) / bracket)
        - x_element(n - 1, p) * (q_number(n - 1) / bracket)
        - v_element(n, p) * B * (t_mu * (q_pow(n) + q_pow(-n)) / bracket)
    )
    return left - right


def series_rank(n_max: int, p: Params) -> int:
    """Rank of {v_0, ..., v_N, X_1, ..., X_N}; full rank is 2N + 1."""
    family = [v_element(n, p) for n in range(n_max + 1)] + [x_element(n, p) for n in range(1, n_max + 1)]
    return rank_check(family)


def rank_check(family: List[QuotientElement]) -> int:
    """Exact rank of a family of classes over the coefficient field."""
    return rank([x.terms for x in family])


def truncated_spans(n_max: int, p: Params):
    """
    The two families whose spans agree at truncation N:
    {v_0 . b^k, k <= N} + {v_1 . b^k, k <= N-1} and {v_n, n <= N} + {X_n, 1 <= n <= N}.
    """
    b_family = [v_element(0, p) * _b_power(k) for k in range(n_max + 1)]
    b_family += [v_element(1, p) * _b_power(k) for k in range(n_max)]
    series_family = [v_element(n, p) for n in range(n_max + 1)] + [x_element(n, p) for n in range(1, n_max + 1)]
    return b_family, series_family


def same_span(first: List[QuotientElement], second: List[QuotientElement]) -> bool:
    """Spans agree exactly when both ranks equal the rank of the union."""
    joint = rank_check(first + second)
    return rank_check(first) == joint and rank_check(second) == joint


def coproduct_component_difference(n: int, p: Params):
    """Delta maps span{v_n, X_n} into its own tensor square: checked on both basis classes."""
    v_n, x_n = v_element(n, p), x_element(n, p)
    return quotient_coproduct(v_n) - class_tensor(v_n, v_n), x_coproduct_difference(n, p)


def non_divisible_coefficients(x: QuotientElement) -> List[str]:
    """Written classes whose coefficient in x is not divisible by q - q^-1 as a Laurent polynomial."""
    failures = []
    for rep, coefficient in x.sorted_items():
        if not coefficient.is_laurent() or not divides_laurent(coefficient, Q_GAP):
            failures.append(f"{rep}: {coefficient}")
    return failures


def classical_limit_witness(n: int, p: Params) -> List[str]:
    """
    Divisibility of v_(2n) - v_0 and v_(2n+1) - v_1 by q - q^-1, and the
    specialized relation v_(n+1) - v_(n-1) = (q - q^-1) t mu [n] v_n . b.

    Raises:
        NotSpecialSeries: unless mu^2 = nu
    """
    _require_special(p)
    failures = []
    for label, difference in (
        (f"v_{2 * n} - v_0", v_element(2 * n, p) - v_element(0, p)),
        (f"v_{2 * n + 1} - v_1", v_element(2 * n + 1, p) - v_element(1, p)),
    ):
        failures += [f"{label} at {entry}" for entry in non_divisible_coefficients(difference)]
    relation = (v_element(n + 1, p) - v_element(n - 1, p)) - v_element(n, p) * B * (
        Q_GAP * t_pow(1) * p.mu * q_number(n)
    )
    if relation:
        failures.append(f"v_{n + 1} - v_{n - 1} relation: {relation}")
    return failures


def classical_limit_check(n: int, p: Params):
    """Check records for the classical-limit statements at index n."""
    return [run_check(f"classical-limit-{n}", lambda: classical_limit_witness(n, p))]
