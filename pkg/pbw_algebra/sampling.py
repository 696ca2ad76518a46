# Seeded random elements for the sampled property checks of the verification
# suites. The tests draw their own elements through hypothesis strategies.

import random
from fractions import Fraction
from typing import List

from scalars import Scalar, t_pow

from .element import AlgebraElement
from .monomial import GENERATORS, Monomial


def random_scalar(rng: random.Random, max_power: int = 2) -> Scalar:
    """A small nonzero rational times t^k, |k| <= max_power."""
    numerator = rng.choice([-3, -2, -1, 1, 2, 3])
    denominator = rng.choice([1, 1, 2, 3])
    return Scalar.from_rational(Fraction(numerator, denominator)) * t_pow(rng.randint(-max_power, max_power))


def random_monomial(rng: random.Random, max_degree: int) -> Monomial:
    degree = rng.randint(0, max_degree)
    exponents = [0, 0, 0, 0]
    outer = rng.choice((0, 3))
    for _ in range(degree):
        exponents[rng.choice((outer, 1, 2))] += 1
    return Monomial(*exponents)


def random_element(rng: random.Random, max_degree: int, max_terms: int = 3) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(rng, max_degree)] = random_scalar(rng)
    return AlgebraElement(terms)


def random_word(rng: random.Random, max_length: int, min_length: int = 0) -> List[str]:
    return [rng.choice(GENERATORS) for _ in range(rng.randint(min_length, max_length))]
