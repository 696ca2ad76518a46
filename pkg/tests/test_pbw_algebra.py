import pytest
from hypothesis import given
from hypothesis import strategies as st

from scalars import q_pow, t_pow
from pbw_algebra import (
    AlgebraElement,
    FreeWord,
    Monomial,
    associativity_difference,
    closed_form_difference,
    confluence_witness,
    normalize_letters,
    pbw_violations,
    random_strategy,
    relation_differences,
    star,
    strategy_difference,
    words_up_to,
)
from tests.strategies import elements, words

A, B, C, D = (AlgebraElement.generator(name) for name in "abcd")


@pytest.mark.parametrize("relation", sorted(relation_differences()))
def test_defining_relations(relation):
    assert not relation_differences()[relation]


def test_da_normal_form():
    assert normalize_letters("da") == 1 + B * C * q_pow(-1)
    assert str(D * A) == "1 + t^-2 b c"


def test_ordered_products():
    assert B * A == A * B * q_pow(-1)
    assert C * B == B * C
    assert D * C == C * D * q_pow(-1)
    assert A * D * A == A + A * B * C * q_pow(-1)


def test_basis_monomials_print_in_order():
    assert str(AlgebraElement.monomial(Monomial(2, 1, 0, 0), t_pow(-1))) == "t^-1 a^2 b"
    assert str(AlgebraElement.zero()) == "0"


def test_confluence_up_to_length_three():
    for letters in words_up_to(3):
        assert confluence_witness(letters) == []
        assert not closed_form_difference(letters)


def test_negative_powers_are_rejected():
    with pytest.raises(ValueError):
        B ** -1


def test_free_word_rejects_unknown_letters():
    with pytest.raises(ValueError):
        FreeWord(("a", "x"))


@given(words, st.integers(min_value=0, max_value=1000))
def test_every_strategy_reaches_the_same_normal_form(letters, seed):
    assert not strategy_difference(letters, random_strategy(seed))


@given(words)
def test_rewriting_matches_closed_form(letters):
    assert not closed_form_difference(letters)


@given(elements(), elements(), elements())
def test_associativity(x, y, z):
    assert not associativity_difference(x, y, z)


@given(elements(), elements())
def test_products_stay_in_the_ordered_basis(x, y):
    assert pbw_violations(x * y) == []


@given(elements(), elements())
def test_star_is_an_antimultiplicative_involution(x, y):
    assert star(star(x)) == x
    assert star(x * y) == star(y) * star(x)


def test_star_fixes_generators_and_conjugates_scalars():
    for generator in (A, B, C, D):
        assert star(generator) == generator
    assert star(A * t_pow(1)) == A * t_pow(-1)
