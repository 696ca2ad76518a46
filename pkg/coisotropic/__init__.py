from .params import Params, SeriesType
from .presets import PRESETS, UnknownPreset, available_presets, get_preset, resolve_preset
from .quotient import (
    ONE_REP,
    QuotientElement,
    Rep,
    Side,
    SideMismatch,
    class_tensor,
    left_reduce,
    module_act,
    quotient_coproduct,
    quotient_counit,
    quotient_tau,
    reduce_element,
    reduce_leg,
    right_reduce,
)
from .coideal import CoidealGenerators, coideal_check, coideal_checks, coideal_control, coideal_generators
from .grouplike import left_v_element, linear_factor, v_element, v_element_direct, w_word
from .expansion import (
    Expansion,
    ExpansionMismatch,
    VanishingDenominator,
    ab_residual,
    expand_bs,
    expansion_residual,
    expansion_coefficient,
    spanning_coordinates,
    v_coordinates,
)
from .special_series import (
    NotSpecialSeries,
    classical_limit_check,
    classical_limit_witness,
    coproduct_component_difference,
    non_divisible_coefficients,
    rank_check,
    same_span,
    series_rank,
    truncated_spans,
    x_coproduct_difference,
    x_element,
    x_recursion_difference,
    x_tau_difference,
    x_three_term_difference,
)
from .checks import (
    NonRealShiftedParameter,
    annihilator_check,
    grouplike_checks,
    grouplike_control,
    left_grouplike_checks,
    recursion_checks,
    reduced_coproduct,
    reduction_examples,
    sampled_checks,
    shifted_mu,
    shifted_params,
    vbva_check,
    w_relation_checks,
)

__all__ = [
    "ONE_REP",
    "PRESETS",
    "CoidealGenerators",
    "Expansion",
    "ExpansionMismatch",
    "NonRealShiftedParameter",
    "NotSpecialSeries",
    "Params",
    "QuotientElement",
    "Rep",
    "SeriesType",
    "Side",
    "SideMismatch",
    "UnknownPreset",
    "VanishingDenominator",
    "ab_residual",
    "annihilator_check",
    "available_presets",
    "class_tensor",
    "classical_limit_check",
    "classical_limit_witness",
    "coideal_check",
    "coideal_checks",
    "coideal_control",
    "coideal_generators",
    "coproduct_component_difference",
    "expand_bs",
    "expansion_coefficient",
    "expansion_residual",
    "get_preset",
    "grouplike_checks",
    "grouplike_control",
    "left_grouplike_checks",
    "left_reduce",
    "left_v_element",
    "linear_factor",
    "module_act",
    "non_divisible_coefficients",
    "quotient_coproduct",
    "quotient_counit",
    "quotient_tau",
    "rank_check",
    "recursion_checks",
    "reduce_element",
    "reduce_leg",
    "reduced_coproduct",
    "reduction_examples",
    "resolve_preset",
    "right_reduce",
    "same_span",
    "sampled_checks",
    "series_rank",
    "shifted_mu",
    "shifted_params",
    "spanning_coordinates",
    "truncated_spans",
    "v_coordinates",
    "vbva_check",
    "v_element",
    "v_element_direct",
    "w_relation_checks",
    "w_word",
    "x_coproduct_difference",
    "x_element",
    "x_recursion_difference",
    "x_tau_difference",
    "x_three_term_difference",
]
