# Closed-form products on ordered monomials.
#
# The defining relations are
#   ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb,
#   ad - q bc = 1 = da - q^-1 bc,
# and left multiplication of a basis monomial a^r b^s c^t d^u (r u = 0) by a
# generator is again a short combination of basis monomials.

import logging
from functools import lru_cache
from typing import Dict, Iterable, Tuple

from scalars import ONE, Scalar, q_pow

from .monomial import Monomial

logger = logging.getLogger(__name__)

Terms = Dict[Monomial, Scalar]
TermTuple = Tuple[Tuple[Monomial, Scalar], ...]


def add_term(terms: Terms, monomial: Monomial, coefficient: Scalar) -> None:
    updated = terms.get(monomial, Scalar()) + coefficient
    if updated:
        terms[monomial] = updated
    else:
        terms.pop(monomial, None)


@lru_cache(maxsize=None)
def left_multiply(generator: str, monomial: Monomial) -> TermTuple:
    r, s, t, u = monomial
    if generator == "a":
        if u == 0:
            return ((Monomial(r + 1, s, t, 0), ONE),)
        return (
            (Monomial(0, s, t, u - 1), q_pow(s + t)),
            (Monomial(0, s + 1, t + 1, u - 1), q_pow(s + t + 1)),
        )
    if generator == "b":
        return ((Monomial(r, s + 1, t, u), q_pow(-r)),)
    if generator == "c":
        return ((Monomial(r, s, t + 1, u), q_pow(-r)),)
    if generator == "d":
        if r == 0:
            return ((Monomial(0, s, t, u + 1), q_pow(-s - t)),)
        return (
            (Monomial(r - 1, s, t, 0), ONE),
            (Monomial(r - 1, s + 1, t + 1, 0), q_pow(1 - 2 * r)),
        )
    raise ValueError(f"Unknown generator: {generator}")


def left_multiply_terms(generator: str, terms: Terms) -> Terms:
    result: Terms = {}
    for monomial, coefficient in terms.items():
        for product, factor in left_multiply(generator, monomial):
            add_term(result, product, coefficient * factor)
    return result


def multiply_word(letters: Iterable[str], terms: Terms) -> Terms:
    """Left-multiply terms by the word letters[0] letters[1] ... (rightmost letter first)."""
    for generator in reversed(tuple(letters)):
        terms = left_multiply_terms(generator, terms)
    return terms


@lru_cache(maxsize=None)
def multiply_monomials(left: Monomial, right: Monomial) -> TermTuple:
    logger.debug(f"product of monomials {left} * {right}")
    return tuple(multiply_word(left.letters(), {right: ONE}).items())
