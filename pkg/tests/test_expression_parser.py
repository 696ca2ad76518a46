import pytest
from hypothesis import given

from scalars import Scalar, t_pow
from pbw_algebra import AlgebraElement
from commands.command_utils import (
    ExpressionDomainError,
    ExpressionSyntaxError,
    parse_element,
    parse_expression,
    tokenize,
)

from tests.strategies import elements

a, b, c, d = (AlgebraElement.generator(name) for name in "abcd")


def test_quantum_determinant_is_one():
    assert parse_element("d a - 1/(t^2) b c") == AlgebraElement.one()


def test_generator_runs_split_into_words():
    assert [token.text for token in tokenize("abc")] == ["a", "b", "c"]
    assert parse_element("abc") == a * b * c
    assert parse_element("a b c") == a * b * c


def test_scalars():
    assert parse_element("q") == AlgebraElement.scalar(t_pow(2))
    assert parse_element("t^-3 a") == a * t_pow(-3)
    assert parse_element("-1/2 t a") == a * (Scalar.from_rational("-1/2") * t_pow(1))
    assert parse_element("(t + t^-1) b") == b * (t_pow(1) + t_pow(-1))
    assert parse_element("2 * a^2 / 3") == a * a * Scalar.from_rational("2/3")


def test_ordered_output():
    assert str(parse_element("d a")) == "1 + t^-2 b c"


def test_parameter_symbols(rplus, s1):
    assert parse_element("chip + chim", rplus) == AlgebraElement.scalar(3)
    assert parse_element("chip chim", rplus) == AlgebraElement.scalar(rplus.nu)
    assert parse_element("mu a + nu", s1) == AlgebraElement.one()
    assert str(parse_element("t sqrtD", s1)) == "t sqrtD"
    assert parse_element("sqrtD^2", s1) == AlgebraElement.scalar(-1)


def test_parameter_symbols_need_parameters():
    with pytest.raises(ExpressionDomainError):
        parse_element("mu a")


@pytest.mark.parametrize("source", ["b^-1", "a / b", "a / (t - t)", "0^-1", "(a + 1)^-2"])
def test_domain_errors(source):
    with pytest.raises(ExpressionDomainError):
        parse_element(source)


@pytest.mark.parametrize(
    "source, position",
    [
        ("a +", 3),
        ("a $ b", 2),
        ("x", 0),
        ("a abx", 2),
        ("(a b", 4),
        ("a ^ b", 4),
        ("", 0),
        ("a )", 2),
    ],
)
def test_syntax_error_positions(source, position):
    with pytest.raises(ExpressionSyntaxError) as error:
        parse_expression(source)
    assert error.value.position == position


@given(elements())
def test_printed_elements_parse_back(x):
    assert parse_element(str(x)) == x
