import logging
from dataclasses import dataclass

from scalars import Scalar
from pbw_algebra import AlgebraElement, Monomial

from .maps import antipode, coproduct, iterated_coproduct

logger = logging.getLogger(__name__)


class ZeroAlpha(ValueError):
    pass


class NonRealCharacter(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    """The character g_alpha: a -> alpha, d -> 1/alpha, b, c -> 0, for real nonzero alpha."""

    alpha: Scalar

    def __post_init__(self):
        alpha = Scalar.coerce(self.alpha)
        if not alpha:
            raise ZeroAlpha("a character needs alpha != 0")
        if alpha.conjugate() != alpha:
            raise NonRealCharacter(f"alpha = {alpha} is not real")
        object.__setattr__(self, "alpha", alpha)

    def on_monomial(self, monomial: Monomial) -> Scalar:
        if monomial.b or monomial.c:
            return Scalar()
        return self.alpha ** (monomial.a - monomial.d)

    def after_antipode(self, monomial: Monomial) -> Scalar:
        return character_eval(self, antipode(AlgebraElement.monomial(monomial)))


def character_eval(g: Character, x: AlgebraElement) -> Scalar:
    total = Scalar()
    for monomial, coefficient in x.terms.items():
        value = g.on_monomial(monomial)
        if value:
            total = total + coefficient * value
    return total


def right_translation(g: Character, x: AlgebraElement) -> AlgebraElement:
    """(id (x) g) Delta x."""
    return coproduct(x).contract_leg(1, g.on_monomial).to_element()


def left_translation(g: Character, x: AlgebraElement) -> AlgebraElement:
    """(g o S (x) id) Delta x."""
    return coproduct(x).contract_leg(0, g.after_antipode).to_element()


def adjoint_action(g: Character, x: AlgebraElement) -> AlgebraElement:
    """Ad_g x = sum g(S(x_(1))) x_(2) g(x_(3))."""
    third_leg_done = iterated_coproduct(x).contract_leg(2, g.on_monomial)
    return third_leg_done.contract_leg(0, g.after_antipode).to_element()
