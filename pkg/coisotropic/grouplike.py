import logging
from functools import lru_cache

from scalars import Scalar, q_pow, t_pow
from pbw_algebra import AlgebraElement

from .params import Params
from .quotient import QuotientElement, Side, reduce_element, right_reduce

logger = logging.getLogger(__name__)

A, B = AlgebraElement.generator("a"), AlgebraElement.generator("b")


def _sign(n: int) -> int:
    return -1 if n < 0 else 1


def linear_factor(coefficient: Scalar) -> AlgebraElement:
    """a + coefficient * b."""
    return A + B * coefficient


def w_word(n: int, p: Params, side: Side = Side.RIGHT) -> AlgebraElement:
    """
    The word whose class is the group-like v_n, with sigma the sign of n and w_0 = 1.

    right: (a + q^(1/2) chi_sigma b)(a + q^(3/2) chi_sigma b) ... (a + q^(|n| - 1/2) chi_sigma b)
    left:  (a + q^(3/2 - |n|) chi_sigma b) ... (a + q^(-1/2) chi_sigma b)(a + q^(1/2) chi_sigma b)

    For n >= 0 the left class satisfies v_(n+1) = (a + q^(1/2 - n) chi_+ b) . v_n.
    """
    chi = p.chi(_sign(n))
    if Side(side) == Side.LEFT:
        factors = [linear_factor(t_pow(3 - 2 * i) * chi) for i in range(abs(n), 0, -1)]
    else:
        factors = [linear_factor(t_pow(2 * i - 1) * chi) for i in range(1, abs(n) + 1)]
    result = AlgebraElement.one()
    for factor in factors:
        result = result * factor
    return result


def step_factor(n: int, direction: int, p: Params) -> AlgebraElement:
    """
    The factor taking v_n to v_(n + direction):
    v_(n+1) = v_n . (a + q^(n + 1/2) chi_+ b) and v_(n-1) = v_n . (a + q^(-n + 1/2) chi_- b).
    """
    if direction > 0:
        return linear_factor(t_pow(2 * n + 1) * p.chi(1))
    return linear_factor(t_pow(1 - 2 * n) * p.chi(-1))


@lru_cache(maxsize=None)
def v_element(n: int, p: Params) -> QuotientElement:
    """The group-like class v_n, built by the recursion from v_0 = r[1]."""
    if n == 0:
        return QuotientElement.unit(p)
    direction = _sign(n)
    previous = n - direction
    result = v_element(previous, p) * step_factor(previous, direction, p)
    logger.debug(f"v_{n} for {p.name} has {len(result.terms)} written terms")
    return result


def v_element_direct(n: int, p: Params) -> QuotientElement:
    """r[w_n], reduced from the explicit product."""
    return right_reduce(w_word(n, p), p)


def left_v_element(n: int, p: Params) -> QuotientElement:
    """The left class of the reversed word."""
    return reduce_element(w_word(n, p, Side.LEFT), p, Side.LEFT)


def vbva_differences(n: int, p: Params):
    """
    The two sides of

        t (q^n chi_+ - q^-n chi_-) v_n . b = v_(n+1) - v_(n-1)
        (q^n chi_+ - q^-n chi_-) v_n . a = q^n chi_+ v_(n-1) - q^-n chi_- v_(n+1)

    returned as their differences.
    """
    v_n = v_element(n, p)
    gap = q_pow(n) * p.chi_plus - q_pow(-n) * p.chi_minus
    upper, lower = v_element(n + 1, p), v_element(n - 1, p)
    b_line = v_n * B * (t_pow(1) * gap) - (upper - lower)
    a_line = v_n * A * gap - (lower * (q_pow(n) * p.chi_plus) - upper * (q_pow(-n) * p.chi_minus))
    return b_line, a_line


def module_d_difference(n: int, p: Params) -> QuotientElement:
    """v_n . d - v_n . (a + (q^(n + 1/2) chi_+ + q^(-n + 1/2) chi_-) b)."""
    v_n = v_element(n, p)
    coefficient = t_pow(2 * n + 1) * p.chi_plus + t_pow(1 - 2 * n) * p.chi_minus
    return v_n * AlgebraElement.generator("d") - v_n * linear_factor(coefficient)


def downward_step_difference(n: int, p: Params) -> QuotientElement:
    """The recursion read against its build direction: v_(n -/+ 1) = v_n . (step factor)."""
    direction = -_sign(n)
    return v_element(n + direction, p) - v_element(n, p) * step_factor(n, direction, p)
