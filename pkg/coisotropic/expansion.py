import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from scalars import Scalar, q_factorial, q_pow, solve_in_span, t_pow
from pbw_algebra import AlgebraElement, Monomial

from .grouplike import v_element
from .params import Params
from .quotient import QuotientElement, right_reduce

logger = logging.getLogger(__name__)


class VanishingDenominator(ZeroDivisionError):
    pass


class ExpansionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Expansion:
    """r[b^s] = sum_k coefficients[k] v_(s - 2k)."""

    s: int
    coefficients: Dict[int, Scalar]

    def evaluate(self, p: Params) -> QuotientElement:
        total = QuotientElement({}, p)
        for k, coefficient in self.coefficients.items():
            total = total + v_element(self.s - 2 * k, p) * coefficient
        return total


def chi_gap(j: int, p: Params) -> Scalar:
    """q^j chi_+ - q^-j chi_-."""
    return q_pow(j) * p.chi_plus - q_pow(-j) * p.chi_minus


def expansion_coefficient(s: int, k: int, p: Params) -> Scalar:
    """
    C^s_k = (-1)^k t^-s [s]! / ([k]! [s-k]!) * prod_{i = 0..s, i != s-k} 1 / (q^(i-k) chi_+ - q^(k-i) chi_-).

    Raises:
        VanishingDenominator: when one of the factors is exactly zero
    """
    coefficient = t_pow(-s) * q_factorial(s) / (q_factorial(k) * q_factorial(s - k))
    if k % 2:
        coefficient = -coefficient
    for i in range(s + 1):
        if i == s - k:
            continue
        gap = chi_gap(i - k, p)
        if not gap:
            raise VanishingDenominator(f"q^{i - k} chi_+ - q^{k - i} chi_- vanishes for {p}")
        coefficient = coefficient / gap
    return coefficient


def b_power(s: int) -> AlgebraElement:
    return AlgebraElement.monomial(Monomial(0, s, 0, 0))


def expansion_residual(s: int, p: Params, expansion: Optional[Expansion] = None) -> QuotientElement:
    expansion = expansion or Expansion(s, {k: expansion_coefficient(s, k, p) for k in range(s + 1)})
    return expansion.evaluate(p) - right_reduce(b_power(s), p)


def ab_residual(s: int, p: Params) -> QuotientElement:
    """r[a b^s] - q^s r[b^s] . a."""
    a_b_s = AlgebraElement.monomial(Monomial(1, s, 0, 0))
    return right_reduce(a_b_s, p) - (right_reduce(b_power(s), p) * AlgebraElement.generator("a")) * q_pow(s)


def expand_bs(s: int, p: Params, verify: bool = True) -> Expansion:
    """
    The coefficients of r[b^s] on the group-like classes v_s, v_(s-2), ..., v_(-s).

    Args:
        s: The power of b
        p: Parameters with chi_+ != chi_- up to powers of q
        verify: Check the expansion against direct reduction

    Returns:
        The expansion with its exact coefficients

    Raises:
        VanishingDenominator: for the special series
        ExpansionMismatch: when verification fails
    """
    expansion = Expansion(s, {k: expansion_coefficient(s, k, p) for k in range(s + 1)})
    if verify:
        residual = expansion_residual(s, p, expansion)
        if residual:
            raise ExpansionMismatch(f"r[b^{s}] differs from its expansion by {residual}")
        a_residual = ab_residual(s, p)
        if a_residual:
            raise ExpansionMismatch(f"r[a b^{s}] differs from q^{s} r[b^{s}] . a by {a_residual}")
    logger.info(f"expanded r[b^{s}] for {p.name} into {len(expansion.coefficients)} group-like classes")
    return expansion


def v_coordinates(x: QuotientElement, indices: Iterable[int], p: Params) -> Optional[List[Scalar]]:
    """Coordinates of x on the classes v_n, n in indices, or None when x is outside their span."""
    indices = list(indices)
    family = [v_element(n, p).terms for n in indices]
    return solve_in_span(x.terms, family)


def spanning_coordinates(s: int, p: Params):
    """Coordinates of r[b^s] and r[a b^s] on v_k, |k| <= s + 1."""
    indices = range(-s - 1, s + 2)
    b_class = right_reduce(b_power(s), p)
    ab_class = right_reduce(AlgebraElement.monomial(Monomial(1, s, 0, 0)), p)
    return v_coordinates(b_class, indices, p), v_coordinates(ab_class, indices, p)

