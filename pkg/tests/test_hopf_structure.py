import pytest
from hypothesis import given

from scalars import ONE, Scalar, q_pow, sqrt_of
from pbw_algebra import AlgebraElement
from hopf_structure import (
    Character,
    NonRealCharacter,
    TensorElement,
    ZeroAlpha,
    adjoint_action,
    adjoint_differences,
    adjoint_generator_differences,
    antipode,
    antipode_axiom_difference,
    character_eval,
    coproduct,
    counit,
    hopf_axiom_differences,
    left_translation,
    right_translation,
    tau,
)
from tests.strategies import elements

A, B, C, D = (AlgebraElement.generator(name) for name in "abcd")


def test_generator_coproducts():
    assert coproduct(A) == TensorElement.pure(A, A) + TensorElement.pure(B, C)
    assert coproduct(B) == TensorElement.pure(A, B) + TensorElement.pure(B, D)
    assert coproduct(C) == TensorElement.pure(C, A) + TensorElement.pure(D, C)
    assert coproduct(D) == TensorElement.pure(C, B) + TensorElement.pure(D, D)


def test_counit_and_antipode_on_generators():
    assert [counit(x) for x in (A, B, C, D)] == [ONE, Scalar(), Scalar(), ONE]
    assert antipode(A) == D
    assert antipode(B) == -B * q_pow(-1)
    assert antipode(C) == -C * q_pow(1)
    assert antipode(D) == A


def test_coproduct_is_multiplicative_on_the_quantum_determinant():
    determinant = A * D - B * C * q_pow(1)
    assert determinant == AlgebraElement.one()
    assert coproduct(A * D) - coproduct(B * C) * q_pow(1) == TensorElement.pure(AlgebraElement.one(), AlgebraElement.one())


@pytest.mark.parametrize("name", "abcd")
def test_axioms_on_generators(name):
    differences = hopf_axiom_differences(AlgebraElement.generator(name))
    assert {key: str(value) for key, value in differences.items() if value} == {}


@given(elements(max_degree=2, max_terms=2))
def test_axioms_on_random_elements(x):
    differences = hopf_axiom_differences(x)
    assert {key: str(value) for key, value in differences.items() if value} == {}


def test_wrong_antipode_is_detected():
    assert antipode_axiom_difference(B, lambda x: x)


@given(elements())
def test_tau_is_an_involution(x):
    assert tau(tau(x)) == x


def test_character_values():
    g = Character(Scalar(2))
    assert character_eval(g, A * A) == Scalar(4)
    assert character_eval(g, D) == Scalar.from_rational("1/2")
    assert character_eval(g, A * D) == ONE
    assert character_eval(g, B) == Scalar()


def test_translations_of_a():
    g = Character(Scalar(3))
    assert right_translation(g, A) == A * 3
    assert left_translation(g, A) == A / 3


def test_adjoint_action_on_generators():
    g = Character(Scalar(2))
    assert {key: str(value) for key, value in adjoint_generator_differences(g).items() if value} == {}
    assert adjoint_action(g, B) == B / 4


@given(elements(max_degree=1), elements(max_degree=1))
def test_adjoint_action_is_a_hopf_map(x, y):
    differences = adjoint_differences(Character(Scalar.from_rational("1/3")), x, y)
    assert {key: str(value) for key, value in differences.items() if value} == {}


def test_characters_need_real_nonzero_alpha():
    with pytest.raises(ZeroAlpha):
        Character(Scalar())
    with pytest.raises(NonRealCharacter):
        Character(sqrt_of(-1))
