import pytest

from scalars import Scalar, t_pow
from pbw_algebra import AlgebraElement
from hopf_structure import NonRealCharacter, ZeroAlpha
from coisotropic import get_preset
from homogeneous import (
    ad_factors,
    ad_transport_check,
    character_checks,
    coinvariance_checks,
    coinvariance_control,
    double_coset_control,
    double_coset_element,
    double_coset_member,
    double_coset_rank,
    grading_checks,
    homspace_character,
    is_left_sector,
    is_right_sector,
    rescale_factors,
    rescale_homspace,
    transported_params,
    verify_z_structure,
    z_generators,
    z_monomials,
    z_structure_control,
)
from reports import PASS

HALF = Scalar.from_rational("1/2")


def failures(checks):
    return [check for check in checks if check["status"] != PASS]


def test_z_structure(preset):
    assert failures(verify_z_structure(preset)) == []
    assert z_structure_control(preset)["status"] == PASS


def test_z_monomials_are_coinvariant(preset):
    assert failures(coinvariance_checks(preset, 2)) == []
    assert coinvariance_control(preset)["status"] == PASS


def test_z_monomial_labels(s1):
    labels = [label for label, _ in z_monomials(z_generators(s1), 2)]
    assert len(labels) == 9
    assert "z1^1z2^0z3^1" in labels


def test_sector_membership(s1):
    z1, _, _ = z_generators(s1)
    assert is_right_sector(z1, s1, 0)
    assert not is_right_sector(AlgebraElement.generator("b"), s1, 0)


def test_grading(preset):
    assert failures(grading_checks(preset)) == []


@pytest.mark.parametrize("n", [0, 1])
def test_double_coset_powers(preset, n):
    assert failures(double_coset_member(n, preset)) == []


def test_double_coset_square(s1):
    assert failures(double_coset_member(2, s1)) == []
    assert is_left_sector(double_coset_element(s1), s1, 0)


def test_double_coset_rank(preset):
    assert double_coset_rank(2, preset) == 3
    assert double_coset_control(preset)["status"] == PASS


@pytest.mark.parametrize("alpha", ["2", "1/3", "-1"])
def test_homspace_characters(preset, alpha):
    assert failures(character_checks(alpha, preset)) == []


def test_homspace_character_values(rplus):
    g = homspace_character(2, rplus)
    assert g["z1"] == Scalar()
    assert g["z2"] == Scalar(2) * rplus.nu
    assert g["z3"] == HALF
    with pytest.raises(ZeroAlpha):
        homspace_character(0, rplus)
    with pytest.raises(NonRealCharacter):
        homspace_character(Scalar(0, 1, -1), get_preset("s1"))
    with pytest.raises(NonRealCharacter):
        homspace_character(t_pow(1), rplus)


def test_rescaling(preset):
    assert failures(rescale_homspace(2, preset)) == []


def test_rescaling_factors(rplus):
    fits = rescale_factors(2, rplus)
    assert len({str(fit.factor) for fit in fits}) == 1
    assert all(fit.lam is not None and fit.factor for fit in fits)


def test_transported_params(rplus):
    transported = transported_params(2, rplus)
    assert transported.mu == Scalar.from_rational("3/8")
    assert transported.nu == Scalar.from_rational("1/16")


@pytest.mark.parametrize("name", ["rplus", "s1", "special"])
def test_adjoint_transport(name):
    p = get_preset(name)
    assert failures(ad_transport_check(2, p, samples=2, max_degree=1)) == []
    assert all(coordinates is not None for coordinates in ad_factors("1/3", p))
