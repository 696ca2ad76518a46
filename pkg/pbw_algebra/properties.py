# Witnesses for the structural properties of the ordered normal form. Each
# function returns a falsy value when the property holds.

from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from scalars import q_pow

from .element import AlgebraElement
from .rewriting import Strategy, all_normal_forms, leftmost, normalize_letters

A, B, C, D = (AlgebraElement.generator(name) for name in "abcd")


def words_up_to(length: int) -> Iterator[Tuple[str, ...]]:
    for size in range(length + 1):
        yield from product("abcd", repeat=size)


def product_of_letters(letters: Sequence[str]) -> AlgebraElement:
    result = AlgebraElement.one()
    for letter in letters:
        result = result * AlgebraElement.generator(letter)
    return result


def confluence_witness(letters: Sequence[str]) -> List[str]:
    """Distinct normal forms reachable from the word, when there is more than one."""
    forms = all_normal_forms(tuple(letters))
    if len(forms) == 1:
        return []
    return sorted(str(form) for form in forms)


def strategy_difference(letters: Sequence[str], strategy: Strategy) -> AlgebraElement:
    """The normal form under strategy minus the leftmost normal form."""
    return normalize_letters(letters, strategy) - normalize_letters(letters, leftmost)


def closed_form_difference(letters: Sequence[str]) -> AlgebraElement:
    """Rewriting and the closed-form product must agree on every word."""
    return normalize_letters(letters) - product_of_letters(letters)


def associativity_difference(x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> AlgebraElement:
    return (x * y) * z - x * (y * z)


def pbw_violations(x: AlgebraElement) -> List[str]:
    """Stored monomials with both a and d present."""
    return [str(monomial) for monomial in x.terms if monomial.a and monomial.d]


def relation_differences() -> Dict[str, AlgebraElement]:
    """The defining relations, each rearranged to be zero."""
    return {
        "relation-ab": A * B - B * A * q_pow(1),
        "relation-ac": A * C - C * A * q_pow(1),
        "relation-bd": B * D - D * B * q_pow(1),
        "relation-cd": C * D - D * C * q_pow(1),
        "relation-bc": B * C - C * B,
        "relation-ad": A * D - B * C * q_pow(1) - 1,
        "relation-da": D * A - B * C * q_pow(-1) - 1,
    }
