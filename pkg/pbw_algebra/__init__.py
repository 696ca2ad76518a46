from .monomial import GENERATORS, IDENTITY, Monomial, generator_monomial
from .element import AlgebraElement, format_terms, generators, multiply
from .involution import star
from .sampling import random_element, random_monomial, random_scalar, random_word
from .properties import (
    associativity_difference,
    closed_form_difference,
    confluence_witness,
    pbw_violations,
    product_of_letters,
    relation_differences,
    strategy_difference,
    words_up_to,
)
from .rewriting import (
    REWRITE_RULES,
    FreeWord,
    all_normal_forms,
    leftmost,
    normalize_letters,
    normalize_word,
    random_strategy,
)

__all__ = [
    "GENERATORS",
    "IDENTITY",
    "REWRITE_RULES",
    "AlgebraElement",
    "FreeWord",
    "Monomial",
    "all_normal_forms",
    "associativity_difference",
    "closed_form_difference",
    "confluence_witness",
    "pbw_violations",
    "product_of_letters",
    "relation_differences",
    "strategy_difference",
    "words_up_to",
    "format_terms",
    "generator_monomial",
    "generators",
    "leftmost",
    "multiply",
    "normalize_letters",
    "normalize_word",
    "random_element",
    "random_monomial",
    "random_scalar",
    "random_strategy",
    "random_word",
    "star",
]
