import logging
import operator
from functools import lru_cache
from typing import Tuple

from sympy import factorint
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement

from .ratfunc import (
    RATFUNC_FIELD,
    evaluate,
    invert_t,
    is_laurent,
    join_terms,
    normalize,
    ratfunc,
    ratfunc_terms,
    rational_sqrt,
    t_power,
    to_qq,
)

logger = logging.getLogger(__name__)

SQRT_SYMBOL = "sqrtD"


@lru_cache(maxsize=None)
def canonical_radicand(numerator: int, denominator: int) -> Tuple[int, object]:
    """
    Write sqrt(numerator / denominator) as factor * sqrt(free) with free a
    square-free integer.

    Returns:
        The pair (free, factor) with factor in QQ
    """
    product = numerator * denominator
    square, free = 1, 1
    for prime, exponent in factorint(abs(product)).items():
        square *= prime ** (exponent // 2)
        if exponent % 2:
            free *= prime
    return (-free if product < 0 else free), QQ(square, denominator)


class DivisionByZero(ZeroDivisionError):
    pass


class IncompatibleRadicand(ValueError):
    """Raised when scalars from two different quadratic extensions are combined."""


class Scalar:
    """
    An element re + rad * sqrt(R) of Q(t)(sqrt(R)).

    The radicand R is kept as a square-free integer; any other rational
    radicand is rewritten to that form and a square radicand (or zero) is
    folded into the rational part, so equality is structural.
    Conjugation sends t to 1/t and sqrt(R) to -sqrt(R) when R < 0.
    """

    __slots__ = ("re", "rad", "radicand", "_hash")

    def __init__(self, re=0, rad=0, radicand=0):
        re = ratfunc(re)
        rad = ratfunc(rad)
        radicand = to_qq(radicand)
        if rad and radicand:
            free, factor = canonical_radicand(int(radicand.numerator), int(radicand.denominator))
            if factor != 1:
                rad = normalize(rad * factor)
            if free == 1:
                re, rad = normalize(re + rad), RATFUNC_FIELD.zero
            radicand = QQ(free)
        elif rad:
            rad = RATFUNC_FIELD.zero
        if not rad:
            radicand = QQ(0)
        self.re = re
        self.rad = rad
        self.radicand = radicand
        self._hash = None

    @classmethod
    def from_rational(cls, value) -> "Scalar":
        return cls(ratfunc(value))

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, FracElement):
            return cls(value)
        return cls.from_rational(value)

    def _pick_radicand(self, other: "Scalar"):
        if not self.rad:
            return other.radicand
        if not other.rad or self.radicand == other.radicand:
            return self.radicand
        raise IncompatibleRadicand(f"cannot combine sqrt({self.radicand}) with sqrt({other.radicand})")

    # arithmetic

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        radicand = self._pick_radicand(other)
        return Scalar(self.re + other.re, self.rad + other.rad, radicand)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.rad, self.radicand)

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        radicand = self._pick_radicand(other)
        return Scalar(self.re - other.re, self.rad - other.rad, radicand)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        radicand = self._pick_radicand(other)
        re = self.re * other.re
        if self.rad and other.rad:
            re = re + self.rad * other.rad * radicand
        rad = self.re * other.rad + self.rad * other.re
        return Scalar(re, rad, radicand)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise DivisionByZero("division by the zero scalar")
        if not self.rad:
            return Scalar(RATFUNC_FIELD.one / self.re)
        norm = self.re * self.re - self.rad * self.rad * self.radicand
        return Scalar(self.re / norm, -self.rad / norm, self.radicand)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # structure

    def conjugate(self) -> "Scalar":
        rad = invert_t(self.rad)
        if self.radicand < 0:
            rad = -rad
        return Scalar(invert_t(self.re), rad, self.radicand)

    def is_real(self) -> bool:
        return self.conjugate() == self

    def evaluate(self, t0) -> "Scalar":
        return Scalar(evaluate(self.re, t0), evaluate(self.rad, t0), self.radicand)

    def is_laurent(self) -> bool:
        return is_laurent(self.re) and is_laurent(self.rad)

    def is_constant(self) -> bool:
        return self.re.denom == 1 and self.re.numer.is_ground and self.rad.denom == 1 and self.rad.numer.is_ground

    def as_rational(self):
        """Return the value as a QQ element; raises ValueError for non-rational scalars."""
        if self.rad or not self.is_constant():
            raise ValueError(f"{self} is not a rational number")
        return self.re.numer.LC if self.re else QQ(0)

    def __bool__(self):
        return bool(self.re) or bool(self.rad)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.re == other.re and self.rad == other.rad and self.radicand == other.radicand

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.re, self.rad, self.radicand))
        return self._hash

    def terms(self) -> list:
        """Signed term list used by the element printers."""
        return ratfunc_terms(self.re) + ratfunc_terms(self.rad, SQRT_SYMBOL)

    def is_simple(self) -> bool:
        """True when the scalar prints as a single signed term."""
        return len(self.terms()) == 1 and self.is_laurent()

    def __str__(self):
        return join_terms(self.terms())

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar()
ONE = Scalar(1)
T_SCALAR = Scalar(t_power(1))


def t_pow(k: int) -> Scalar:
    return Scalar(t_power(k))


def q_pow(k: int) -> Scalar:
    """q^k = t^(2k)."""
    return Scalar(t_power(2 * k))


def sqrt_of(value, radicand=None) -> Scalar:
    """
    Square root of a rational value inside Q(sqrt(radicand)).

    Args:
        value: A rational number
        radicand: The radicand of the target field, defaults to value itself

    Returns:
        The root with nonnegative rational factor

    Raises:
        ValueError: when the root is not in the requested field
    """
    value = to_qq(value)
    root = rational_sqrt(value)
    if root is not None:
        return Scalar(root)
    radicand = to_qq(value if radicand is None else radicand)
    factor = rational_sqrt(value / radicand) if radicand else None
    if factor is None:
        raise ValueError(f"sqrt({value}) does not lie in Q(sqrt({radicand}))")
    return Scalar(0, factor, radicand)


_OPERATIONS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar_arith(op: str, x: Scalar, y: Scalar) -> Scalar:
    try:
        return _OPERATIONS[op](Scalar.coerce(x), Scalar.coerce(y))
    except KeyError:
        raise ValueError(f"Unknown scalar operation: {op}")


def conjugate(x: Scalar) -> Scalar:
    return Scalar.coerce(x).conjugate()


def eval_at_t(x: Scalar, t0) -> Scalar:
    return Scalar.coerce(x).evaluate(t0)
