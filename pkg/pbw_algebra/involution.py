from functools import lru_cache

from scalars import ONE

from .element import AlgebraElement
from .monomial import IDENTITY, Monomial
from .relations import multiply_word


@lru_cache(maxsize=None)
def _reversed_monomial(monomial: Monomial) -> AlgebraElement:
    return AlgebraElement(multiply_word(tuple(reversed(monomial.letters())), {IDENTITY: ONE}))


def star(x: AlgebraElement) -> AlgebraElement:
    """The antilinear antimultiplicative involution fixing a, b, c and d."""
    result = AlgebraElement.zero()
    for monomial, coefficient in x.terms.items():
        result = result + _reversed_monomial(monomial) * coefficient.conjugate()
    return result
