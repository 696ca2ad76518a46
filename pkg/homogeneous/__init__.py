from .z_space import (
    UNIT_KEY,
    Z_NAMES,
    ZGenerators,
    commutation_differences,
    expected_z_coproduct,
    perturbed_z_generators,
    verify_z_structure,
    z_coproduct_terms,
    z_generators,
    z_structure_control,
)
from .sectors import (
    coinvariance_checks,
    coinvariance_control,
    double_coset_control,
    double_coset_element,
    double_coset_member,
    double_coset_rank,
    double_coset_rank_check,
    grading_checks,
    is_left_sector,
    is_right_sector,
    left_sector_difference,
    right_sector_difference,
    z_monomials,
)
from .characters import (
    Rescaling,
    character_checks,
    character_relation_differences,
    fit_rescaling,
    homspace_character,
    rescale_factors,
    rescale_homspace,
    rescaled_params,
    translated_generator,
)
from .transport import ad_factors, ad_transport_check, coideal_coordinates, transported_params

__all__ = [
    "UNIT_KEY",
    "Z_NAMES",
    "Rescaling",
    "ZGenerators",
    "ad_factors",
    "ad_transport_check",
    "character_checks",
    "character_relation_differences",
    "coideal_coordinates",
    "coinvariance_checks",
    "coinvariance_control",
    "commutation_differences",
    "double_coset_control",
    "double_coset_element",
    "double_coset_member",
    "double_coset_rank",
    "double_coset_rank_check",
    "expected_z_coproduct",
    "fit_rescaling",
    "grading_checks",
    "homspace_character",
    "is_left_sector",
    "is_right_sector",
    "left_sector_difference",
    "perturbed_z_generators",
    "rescale_factors",
    "rescale_homspace",
    "rescaled_params",
    "right_sector_difference",
    "transported_params",
    "translated_generator",
    "verify_z_structure",
    "z_coproduct_terms",
    "z_generators",
    "z_monomials",
    "z_structure_control",
]
