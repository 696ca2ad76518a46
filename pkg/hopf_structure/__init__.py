from .tensor import TENSOR_SYMBOL, TensorElement
from .maps import (
    GENERATOR_COPRODUCTS,
    antipode,
    apply_legs,
    coproduct,
    coproduct_second_leg,
    counit,
    iterated_coproduct,
    monomial_coproduct,
    monomial_counit,
    multiply_legs,
    tau,
    tensor_star,
)
from .axioms import adjoint_differences, adjoint_generator_differences, antipode_axiom_difference, hopf_axiom_differences
from .characters import (
    Character,
    NonRealCharacter,
    ZeroAlpha,
    adjoint_action,
    character_eval,
    left_translation,
    right_translation,
)

__all__ = [
    "GENERATOR_COPRODUCTS",
    "TENSOR_SYMBOL",
    "Character",
    "NonRealCharacter",
    "TensorElement",
    "ZeroAlpha",
    "adjoint_action",
    "adjoint_differences",
    "adjoint_generator_differences",
    "antipode_axiom_difference",
    "hopf_axiom_differences",
    "antipode",
    "apply_legs",
    "character_eval",
    "coproduct",
    "coproduct_second_leg",
    "counit",
    "iterated_coproduct",
    "left_translation",
    "monomial_coproduct",
    "monomial_counit",
    "multiply_legs",
    "right_translation",
    "tau",
    "tensor_star",
]
