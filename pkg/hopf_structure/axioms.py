# The Hopf *-algebra axioms and the properties of Ad_g, each written as a
# difference that vanishes when the identity holds.

from typing import Dict

from pbw_algebra import AlgebraElement, star

from .characters import Character, adjoint_action
from .maps import (
    antipode,
    apply_legs,
    coproduct,
    coproduct_second_leg,
    counit,
    iterated_coproduct,
    monomial_counit,
    multiply_legs,
    tau,
    tensor_star,
)


def _identity(x: AlgebraElement) -> AlgebraElement:
    return x


def hopf_axiom_differences(x: AlgebraElement) -> Dict[str, object]:
    """Coassociativity, both counit and antipode axioms, * compatibility and tau^2 = id on x."""
    delta = coproduct(x)
    unit_part = AlgebraElement.scalar(counit(x))
    return {
        "coassociativity": iterated_coproduct(x) - coproduct_second_leg(x),
        "counit-left": delta.contract_leg(0, monomial_counit).to_element() - x,
        "counit-right": delta.contract_leg(1, monomial_counit).to_element() - x,
        "antipode-left": multiply_legs(apply_legs(delta, antipode, _identity)) - unit_part,
        "antipode-right": multiply_legs(apply_legs(delta, _identity, antipode)) - unit_part,
        "star-coproduct": coproduct(star(x)) - tensor_star(delta),
        "tau-involution": tau(tau(x)) - x,
    }


def antipode_axiom_difference(x: AlgebraElement, antipode_map) -> AlgebraElement:
    """m (S (x) id) Delta x - eps(x) 1 for an arbitrary candidate antipode."""
    return multiply_legs(apply_legs(coproduct(x), antipode_map, _identity)) - AlgebraElement.scalar(counit(x))


def adjoint_differences(g: Character, x: AlgebraElement, y: AlgebraElement) -> Dict[str, object]:
    """Ad_g is multiplicative, a coalgebra map and commutes with tau."""

    def ad(element: AlgebraElement) -> AlgebraElement:
        return adjoint_action(g, element)

    return {
        "ad-multiplicative": ad(x * y) - ad(x) * ad(y),
        "ad-coproduct": coproduct(ad(x)) - apply_legs(coproduct(x), ad, ad),
        "ad-tau": ad(tau(x)) - tau(ad(x)),
    }


def adjoint_generator_differences(g: Character) -> Dict[str, AlgebraElement]:
    """Ad_g a = a, Ad_g b = alpha^-2 b, Ad_g c = alpha^2 c, Ad_g d = d."""
    alpha_squared = g.alpha * g.alpha
    expected = {
        "a": AlgebraElement.generator("a"),
        "b": AlgebraElement.generator("b") * alpha_squared.inverse(),
        "c": AlgebraElement.generator("c") * alpha_squared,
        "d": AlgebraElement.generator("d"),
    }
    return {
        f"ad-{name}": adjoint_action(g, AlgebraElement.generator(name)) - image for name, image in expected.items()
    }
