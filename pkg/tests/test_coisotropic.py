import pytest

from scalars import ONE, Scalar, q_pow, t_pow
from pbw_algebra import AlgebraElement
from coisotropic import (
    NonRealShiftedParameter,
    NotSpecialSeries,
    Params,
    SeriesType,
    Side,
    SideMismatch,
    UnknownPreset,
    VanishingDenominator,
    annihilator_check,
    classical_limit_check,
    coideal_checks,
    coideal_control,
    coideal_generators,
    expand_bs,
    expansion_residual,
    get_preset,
    grouplike_checks,
    grouplike_control,
    left_grouplike_checks,
    left_reduce,
    left_v_element,
    linear_factor,
    module_act,
    quotient_counit,
    recursion_checks,
    reduction_examples,
    resolve_preset,
    right_reduce,
    same_span,
    sampled_checks,
    series_rank,
    shifted_params,
    spanning_coordinates,
    truncated_spans,
    v_element,
    vbva_check,
    w_relation_checks,
    w_word,
    x_coproduct_difference,
    x_element,
    x_recursion_difference,
    x_tau_difference,
    x_three_term_difference,
)
from reports import PASS

A, B, C, D = (AlgebraElement.generator(name) for name in "abcd")


def failures(checks):
    return [check for check in checks if check["status"] != PASS]


def test_series_types(rplus, s1, special):
    assert rplus.series_type == SeriesType.RPLUS
    assert s1.series_type == SeriesType.S1
    assert special.series_type == SeriesType.SPECIAL
    assert special.chi_plus == special.chi_minus == special.mu


def test_chi_are_the_roots(preset):
    assert preset.chi_plus + preset.chi_minus == preset.mu * 2
    assert preset.chi_plus * preset.chi_minus == preset.nu
    assert preset.theta == preset.nu - preset.mu * preset.mu


def test_unknown_preset():
    with pytest.raises(UnknownPreset):
        get_preset("hyperbolic")
    with pytest.raises(UnknownPreset):
        resolve_preset("custom")
    assert resolve_preset("custom", "2", "3") == Params.from_rationals(2, 3)


def test_parameters_must_be_real():
    with pytest.raises(ValueError):
        Params(t_pow(1), ONE)


def test_coideal(preset):
    assert failures(coideal_checks(preset)) == []
    assert coideal_control(preset)["status"] == PASS


def test_quotient_reduction(preset):
    assert failures(reduction_examples(preset)) == []
    k1, k2 = coideal_generators(preset)
    for m in (A, B * C, D * D):
        assert not right_reduce(k1 * m, preset)
        assert not right_reduce(k2 * m, preset)
        assert not left_reduce(m * k1, preset)
        assert not left_reduce(m * k2, preset)


def test_sampled_well_definedness(s1):
    assert failures(sampled_checks(s1, samples=3, max_degree=2)) == []


def test_classes_of_different_sides_do_not_mix(s1):
    with pytest.raises(SideMismatch):
        right_reduce(A, s1) + left_reduce(A, s1)


def test_v1_is_the_class_of_the_linear_factor(preset):
    assert v_element(1, preset) == right_reduce(A + B * (t_pow(1) * preset.chi_plus), preset)
    assert v_element(0, preset) == right_reduce(AlgebraElement.one(), preset)
    assert quotient_counit(v_element(2, preset)) == ONE


@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
def test_grouplike_classes(preset, n):
    assert failures(grouplike_checks(n, preset)) == []
    assert failures(recursion_checks(n, preset)) == []


@pytest.mark.parametrize("n", [-3, -2, -1, 0, 1, 2, 3])
def test_left_grouplike_classes(preset, n):
    assert failures(left_grouplike_checks(n, preset)) == []


def test_left_word_grows_to_the_left(rplus):
    chi = rplus.chi_plus
    expected = linear_factor(t_pow(-1) * chi) * linear_factor(t_pow(1) * chi)
    assert w_word(2, rplus, Side.LEFT) == expected
    assert left_v_element(2, rplus) == left_reduce(expected, rplus)
    assert w_word(-1, rplus, Side.LEFT) == w_word(-1, rplus)


def test_module_action(s1):
    x = right_reduce(A * B + B, s1)
    assert module_act(x, AlgebraElement.one()) == x
    assert module_act(x, B) == x * B
    y = left_reduce(A * B, s1)
    assert module_act(y, AlgebraElement.one(), Side.LEFT) == y
    assert module_act(y, B) == B * y
    with pytest.raises(SideMismatch):
        module_act(x, B, Side.LEFT)
    with pytest.raises(SideMismatch):
        module_act(y, A, "right")


@pytest.mark.parametrize("n", [1, 2])
def test_w_relations(preset, n):
    assert failures(w_relation_checks(n, preset)) == []


def test_perturbed_linear_factor_is_not_grouplike(preset):
    assert grouplike_control(preset)["status"] == PASS


@pytest.mark.parametrize("name", ["rplus", "s1"])
def test_expansion_of_b_powers(name):
    p = get_preset(name)
    for s in range(4):
        expansion = expand_bs(s, p)
        assert set(expansion.coefficients) == set(range(s + 1))
        assert not expansion_residual(s, p, expansion)
    assert all(coordinates is not None for coordinates in spanning_coordinates(2, p))


@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
def test_vbva_relations(s1, n):
    assert vbva_check(n, s1)["status"] == PASS


def test_expansion_needs_distinct_roots(special):
    with pytest.raises(VanishingDenominator):
        expand_bs(1, special)


def test_x1(special):
    assert x_element(1, special) == v_element(0, special) * B * (t_pow(1) * special.mu)
    assert not x_element(0, special)


@pytest.mark.parametrize("n", [1, 2])
def test_special_series_identities(special, n):
    assert not x_coproduct_difference(n, special)
    assert not x_tau_difference(n, special)
    assert not x_recursion_difference(n, special)
    assert not x_three_term_difference(n, special)


def test_special_series_rank_and_span(special):
    assert series_rank(2, special) == 5
    assert same_span(*truncated_spans(2, special))


def test_x_needs_the_special_series(rplus):
    with pytest.raises(NotSpecialSeries):
        x_element(1, rplus)


def test_classical_limit(special):
    assert failures(classical_limit_check(1, special)) == []


def test_shifted_parameters(rplus, s1):
    with pytest.raises(NonRealShiftedParameter):
        shifted_params(1, rplus)
    assert shifted_params(0, rplus) == rplus
    shifted = shifted_params(1, s1)
    assert shifted.nu == s1.nu
    assert shifted.mu == (q_pow(1) * s1.chi_plus + q_pow(-1) * s1.chi_minus) / 2


@pytest.mark.parametrize("n", [0, 1, 2])
def test_annihilators(s1, special, n):
    assert failures(annihilator_check(n, s1)) == []
    assert failures(annihilator_check(n, special)) == []


def test_reduced_scalars_are_multiples_of_the_unit(preset):
    assert right_reduce(AlgebraElement.scalar(Scalar(3)), preset) == v_element(0, preset) * 3
