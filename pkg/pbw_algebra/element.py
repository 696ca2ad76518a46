from typing import Dict, Iterator, Tuple

from scalars import ONE, Scalar
from scalars.ratfunc import join_terms

from .monomial import IDENTITY, Monomial, generator_monomial
from .relations import Terms, add_term, multiply_monomials


def format_terms(items, key_text=str) -> str:
    """
    Canonical text for a sum of coefficient * basis-element terms.

    Args:
        items: (key, Scalar) pairs in print order
        key_text: Renders a basis key; "1" is treated as the empty symbol

    Returns:
        The printed sum, "0" for no terms
    """
    pieces = []
    for key, coefficient in items:
        symbol = key_text(key)
        symbol = "" if symbol == "1" else symbol
        if coefficient.is_simple():
            pieces.extend(coefficient.terms() if not symbol else [_attach(coefficient, symbol)])
        else:
            body = f"({coefficient})"
            pieces.append(("+", f"{body} {symbol}" if symbol else body))
    return join_terms(pieces)


def _attach(coefficient: Scalar, symbol: str) -> Tuple[str, str]:
    sign, body = coefficient.terms()[0]
    if body == "1":
        return sign, symbol
    return sign, f"{body} {symbol}"


class AlgebraElement:
    """
    A finite combination of ordered monomials a^r b^s c^t d^u with scalar
    coefficients. Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Monomial, Scalar] = None):
        self._terms = {monomial: coefficient for monomial, coefficient in (terms or {}).items() if coefficient}
        self._hash = None

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({IDENTITY: ONE})

    @classmethod
    def generator(cls, name: str) -> "AlgebraElement":
        return cls({generator_monomial(name): ONE})

    @classmethod
    def scalar(cls, value) -> "AlgebraElement":
        return cls({IDENTITY: Scalar.coerce(value)})

    @classmethod
    def monomial(cls, monomial: Monomial, coefficient=ONE) -> "AlgebraElement":
        return cls({monomial: Scalar.coerce(coefficient)})

    @classmethod
    def coerce(cls, value) -> "AlgebraElement":
        if isinstance(value, AlgebraElement):
            return value
        return cls.scalar(value)

    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.sorted_items())

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self._terms.get(monomial, Scalar())

    def is_scalar(self) -> bool:
        return all(monomial.is_identity() for monomial in self._terms)

    def scalar_part(self) -> Scalar:
        return self.coefficient(IDENTITY)

    @property
    def degree(self) -> int:
        return max((monomial.degree for monomial in self._terms), default=0)

    def map_coefficients(self, function) -> "AlgebraElement":
        return AlgebraElement({monomial: function(coefficient) for monomial, coefficient in self._terms.items()})

    def __add__(self, other):
        try:
            other = AlgebraElement.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            add_term(terms, monomial, coefficient)
        return AlgebraElement(terms)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coefficients(lambda coefficient: -coefficient)

    def __sub__(self, other):
        try:
            other = AlgebraElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return AlgebraElement.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        try:
            factor = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.map_coefficients(lambda coefficient: coefficient * factor)

    def __rmul__(self, other):
        try:
            factor = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.map_coefficients(lambda coefficient: factor * coefficient)

    def __truediv__(self, other):
        factor = Scalar.coerce(other).inverse()
        return self * factor

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"elements can only be raised to natural powers, got {exponent}")
        result = AlgebraElement.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = AlgebraElement.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return format_terms(self.sorted_items())

    def __repr__(self):
        return f"AlgebraElement({self})"


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    terms: Terms = {}
    for left, left_coefficient in x.terms.items():
        for right, right_coefficient in y.terms.items():
            factor = left_coefficient * right_coefficient
            for product, coefficient in multiply_monomials(left, right):
                add_term(terms, product, factor * coefficient)
    return AlgebraElement(terms)


def generators():
    return tuple(AlgebraElement.generator(name) for name in ("a", "b", "c", "d"))
