# Word rewriting for the defining relations.
#
# Letters a and d are moved to the right of b and c:
#   ab -> q ba, ac -> q ca, cb -> bc, db -> q^-1 bd, dc -> q^-1 cd,
#   da -> 1 + q^-1 bc, ad -> 1 + q bc.
# Irreducible words are b^s c^t a^r and b^s c^t d^u. Each step lowers the
# number of a/d letters or the number of inversions against b < c < {a, d},
# so every strategy terminates, and the irreducible words are linearly
# independent, so every strategy reaches the same normal form.

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple

from scalars import ONE, Scalar, q_pow

from .element import AlgebraElement
from .monomial import Monomial

logger = logging.getLogger(__name__)

Word = Tuple[str, ...]
Strategy = Callable[[Word, List[int]], int]

REWRITE_RULES: Dict[Tuple[str, str], Tuple[Tuple[Scalar, Word], ...]] = {
    ("a", "b"): ((q_pow(1), ("b", "a")),),
    ("a", "c"): ((q_pow(1), ("c", "a")),),
    ("c", "b"): ((ONE, ("b", "c")),),
    ("d", "b"): ((q_pow(-1), ("b", "d")),),
    ("d", "c"): ((q_pow(-1), ("c", "d")),),
    ("d", "a"): ((ONE, ()), (q_pow(-1), ("b", "c"))),
    ("a", "d"): ((ONE, ()), (q_pow(1), ("b", "c"))),
}


@dataclass(frozen=True)
class FreeWord:
    letters: Word
    coefficient: Scalar = field(default_factory=lambda: ONE)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter not in ("a", "b", "c", "d"):
                raise ValueError(f"Unknown generator in word: {letter}")


def redexes(word: Word) -> List[int]:
    return [index for index in range(len(word) - 1) if (word[index], word[index + 1]) in REWRITE_RULES]


def leftmost(word: Word, positions: List[int]) -> int:
    return positions[0]


def random_strategy(seed: int = 0) -> Strategy:
    generator = random.Random(seed)

    def choose(word: Word, positions: List[int]) -> int:
        return generator.choice(positions)

    return choose


def rewrite_at(word: Word, position: int) -> Tuple[Tuple[Scalar, Word], ...]:
    replacement = REWRITE_RULES[(word[position], word[position + 1])]
    prefix, suffix = word[:position], word[position + 2 :]
    return tuple((coefficient, prefix + middle + suffix) for coefficient, middle in replacement)


def irreducible_to_element(word: Word) -> AlgebraElement:
    """Map an irreducible word b^s c^t a^r or b^s c^t d^u to the ordered basis."""
    s, t, r, u = word.count("b"), word.count("c"), word.count("a"), word.count("d")
    if r and u:
        raise ValueError(f"word {' '.join(word)} is not irreducible")
    # b^s c^t a^r = q^(-r(s+t)) a^r b^s c^t
    return AlgebraElement.monomial(Monomial(r, s, t, u), q_pow(-r * (s + t)))


def normalize_word(word: FreeWord, strategy: Strategy = leftmost) -> AlgebraElement:
    """
    Rewrite a word into ordered normal form.

    Args:
        word: The word with its coefficient
        strategy: Picks which reducible position to rewrite next

    Returns:
        The normal form as an AlgebraElement
    """
    pending: Dict[Word, Scalar] = {word.letters: word.coefficient}
    result = AlgebraElement.zero()
    steps = 0
    while pending:
        letters, coefficient = pending.popitem()
        positions = redexes(letters)
        if not positions:
            result = result + irreducible_to_element(letters) * coefficient
            continue
        steps += 1
        for factor, rewritten in rewrite_at(letters, strategy(letters, positions)):
            updated = pending.get(rewritten, Scalar()) + coefficient * factor
            if updated:
                pending[rewritten] = updated
            else:
                pending.pop(rewritten, None)
    logger.debug(f"normalized {' '.join(word.letters) or '1'} in {steps} rewriting steps")
    return result


@lru_cache(maxsize=None)
def all_normal_forms(letters: Word) -> FrozenSet[AlgebraElement]:
    """Every normal form reachable from the word under any reduction order."""
    positions = redexes(letters)
    if not positions:
        return frozenset({irreducible_to_element(letters)})
    outcomes = set()
    for position in positions:
        partial = {AlgebraElement.zero()}
        for coefficient, rewritten in rewrite_at(letters, position):
            partial = {done + form * coefficient for done in partial for form in all_normal_forms(rewritten)}
        outcomes |= partial
    return frozenset(outcomes)


def normalize_letters(letters: Sequence[str], strategy: Strategy = leftmost) -> AlgebraElement:
    return normalize_word(FreeWord(tuple(letters)), strategy)
