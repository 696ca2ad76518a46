# Hypothesis strategies for scalars, monomials, words and elements of small degree.

from fractions import Fraction

from hypothesis import strategies as st

from scalars import Scalar, t_pow
from pbw_algebra import GENERATORS, AlgebraElement, Monomial

small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=1, max_value=3),
)
t_exponents = st.integers(min_value=-3, max_value=3)


@st.composite
def laurent_scalars(draw, max_terms: int = 2) -> Scalar:
    """Nonzero-or-zero Laurent polynomials in t with small rational coefficients."""
    total = Scalar()
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        total = total + Scalar.from_rational(draw(small_fractions)) * t_pow(draw(t_exponents))
    return total


@st.composite
def nonzero_scalars(draw) -> Scalar:
    coefficient = draw(small_fractions.filter(lambda value: value != 0))
    return Scalar.from_rational(coefficient) * t_pow(draw(t_exponents))


@st.composite
def quadratic_scalars(draw, radicand: int = -1) -> Scalar:
    """x + y sqrt(radicand) with x, y Laurent."""
    re, rad = draw(laurent_scalars()), draw(laurent_scalars())
    return Scalar(re.re, rad.re, radicand)


@st.composite
def monomials(draw, max_degree: int = 2) -> Monomial:
    outer = draw(st.sampled_from(("a", "d")))
    exponents = {
        outer: draw(st.integers(min_value=0, max_value=max_degree)),
        "b": draw(st.integers(min_value=0, max_value=max_degree)),
        "c": draw(st.integers(min_value=0, max_value=max_degree)),
    }
    while sum(exponents.values()) > max_degree:
        key = max(exponents, key=exponents.get)
        exponents[key] -= 1
    return Monomial(**exponents)


@st.composite
def elements(draw, max_degree: int = 2, max_terms: int = 3) -> AlgebraElement:
    terms = draw(st.dictionaries(monomials(max_degree), nonzero_scalars(), min_size=1, max_size=max_terms))
    return AlgebraElement(terms)


words = st.lists(st.sampled_from(GENERATORS), min_size=0, max_size=5)


@st.composite
def polynomials(draw, max_degree: int = 6) -> Scalar:
    coefficients = draw(st.lists(small_fractions, min_size=1, max_size=max_degree + 1))
    total = Scalar()
    for exponent, coefficient in enumerate(coefficients):
        total = total + Scalar.from_rational(coefficient) * t_pow(exponent)
    return total


@st.composite
def rational_scalars(draw, max_degree: int = 6) -> Scalar:
    """Quotients of polynomials in t of degree at most max_degree, mostly not Laurent."""
    numerator = draw(polynomials(max_degree))
    denominator = draw(polynomials(max_degree).filter(bool))
    return numerator / denominator
