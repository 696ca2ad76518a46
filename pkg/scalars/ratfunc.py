import logging
from fractions import Fraction
from typing import Union

from sympy import integer_nthroot
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

logger = logging.getLogger(__name__)

# The rational function field Q(t) with t = q^(1/2). Every coefficient of the
# library lives in this field or in a quadratic extension of it.
RATFUNC_FIELD, T = field("t", QQ)
T_POLY = RATFUNC_FIELD.ring.gens[0]

Rationalish = Union[int, Fraction, str, object]


class PoleAtEvaluationPoint(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def to_qq(value: Rationalish):
    """
    Convert an int, Fraction, "p/q" string or QQ element to a QQ element.

    Args:
        value: The rational value

    Returns:
        The same value as an element of QQ
    """
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return QQ(value)
    try:
        return QQ.convert(value)
    except Exception as e:
        raise TypeError(f"Cannot interpret {value!r} as a rational number") from e


def qq_to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def rational_sqrt(value):
    """Return the nonnegative rational square root of value, or None when it is irrational."""
    value = to_qq(value)
    if value < 0:
        return None
    numerator, exact_numerator = integer_nthroot(int(value.numerator), 2)
    denominator, exact_denominator = integer_nthroot(int(value.denominator), 2)
    if exact_numerator and exact_denominator:
        return QQ(numerator, denominator)
    return None


def normalize(f: FracElement) -> FracElement:
    """Scale numerator and denominator so the denominator is monic."""
    lc = f.denom.LC
    if lc == 1:
        return f
    return RATFUNC_FIELD.raw_new(f.numer.quo_ground(lc), f.denom.monic())


def ratfunc(value: Rationalish) -> FracElement:
    if isinstance(value, FracElement):
        return normalize(value)
    return RATFUNC_FIELD.ground_new(to_qq(value))


def t_power(k: int) -> FracElement:
    if k >= 0:
        return T**k
    # negative powers through division so sympy cancels into canonical form
    return normalize(RATFUNC_FIELD.one / T ** (-k))


def _substitute_inverse(poly) -> FracElement:
    result = RATFUNC_FIELD.zero
    for (exponent,), coefficient in poly.terms():
        result += t_power(-exponent) * coefficient
    return result


def invert_t(f: FracElement) -> FracElement:
    """Substitute t -> 1/t."""
    if f.denom == 1 and f.numer.is_ground:
        return f
    return normalize(_substitute_inverse(f.numer) / _substitute_inverse(f.denom))


def evaluate(f: FracElement, t0: Rationalish):
    """
    Evaluate a rational function at a rational point.

    Args:
        f: The rational function in t
        t0: The rational evaluation point

    Returns:
        The value as an element of QQ

    Raises:
        PoleAtEvaluationPoint: when the denominator vanishes at t0
    """
    point = to_qq(t0)
    denominator = f.denom.evaluate(T_POLY, point)
    if not denominator:
        logger.debug(f"Pole of {f} at t = {point}")
        raise PoleAtEvaluationPoint(f"denominator of {format_ratfunc(f)} vanishes at t = {point}")
    return f.numer.evaluate(T_POLY, point) / denominator


def is_laurent(f: FracElement) -> bool:
    return f.denom.is_term


def laurent_terms(f: FracElement) -> list:
    """
    Return the terms of a Laurent polynomial as (exponent, coefficient) pairs,
    highest exponent first.
    """
    if not is_laurent(f):
        raise ValueError(f"{f} is not a Laurent polynomial")
    ((shift,), scale) = f.denom.terms()[0]
    return [(exponent - shift, coefficient / scale) for (exponent,), coefficient in f.numer.terms()]


def _format_qq(value) -> str:
    if value.denominator == 1:
        return str(int(value.numerator))
    return f"{int(value.numerator)}/{int(value.denominator)}"


def format_term(coefficient, exponent: int, symbol: str = "") -> tuple:
    """
    Format one term c * t^e * symbol.

    Returns:
        A (sign, body) pair where sign is "+" or "-"
    """
    sign = "-" if coefficient < 0 else "+"
    magnitude = -coefficient if coefficient < 0 else coefficient
    pieces = []
    if magnitude != 1 or (exponent == 0 and not symbol):
        pieces.append(_format_qq(magnitude))
    if exponent == 1:
        pieces.append("t")
    elif exponent != 0:
        pieces.append(f"t^{exponent}")
    if symbol:
        pieces.append(symbol)
    return sign, " ".join(pieces)


def join_terms(terms: list) -> str:
    if not terms:
        return "0"
    text = ""
    for index, (sign, body) in enumerate(terms):
        if index == 0:
            text = f"-{body}" if sign == "-" else body
        else:
            text += f" {sign} {body}"
    return text


def _format_poly(poly) -> str:
    return join_terms([format_term(coefficient, exponent) for (exponent,), coefficient in poly.terms()])


def ratfunc_terms(f: FracElement, symbol: str = "") -> list:
    """Signed term list for f * symbol; a non-Laurent f becomes a single parenthesized term."""
    if not f:
        return []
    if is_laurent(f):
        return [format_term(coefficient, exponent, symbol) for exponent, coefficient in laurent_terms(f)]
    body = f"({_format_poly(f.numer)})/({_format_poly(f.denom)})"
    if symbol:
        body = f"({body}) {symbol}"
    return [("+", body)]


def format_ratfunc(f: FracElement) -> str:
    return join_terms(ratfunc_terms(f))
