from typing import Callable, Dict, Tuple

from scalars import ONE, Scalar
from pbw_algebra import AlgebraElement, format_terms
from pbw_algebra.relations import multiply_monomials

TENSOR_SYMBOL = " (⊗) "

Key = Tuple


def _add(terms: Dict[Key, Scalar], key: Key, coefficient: Scalar) -> None:
    updated = terms.get(key, Scalar()) + coefficient
    if updated:
        terms[key] = updated
    else:
        terms.pop(key, None)


def _expand(image) -> Dict:
    """Coordinates of a leg image: an element with a `terms` map, or such a map itself."""
    if isinstance(image, dict):
        return image
    return image.terms


class TensorElement:
    """
    A finite sum of pure tensors. Each key is a tuple of legs; a leg is a basis
    key of its factor (an ordered monomial, or a quotient representative for
    tensors that involve a quotient coalgebra).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Key, Scalar] = None):
        self._terms = {key: coefficient for key, coefficient in (terms or {}).items() if coefficient}
        self._hash = None

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls()

    @classmethod
    def pure(cls, *factors) -> "TensorElement":
        """The tensor product factors[0] (x) factors[1] (x) ... of elements with coordinate maps."""
        terms: Dict[Key, Scalar] = {(): ONE}
        for factor in factors:
            expanded: Dict[Key, Scalar] = {}
            for key, coefficient in terms.items():
                for leg, leg_coefficient in _expand(factor).items():
                    _add(expanded, key + (leg,), coefficient * leg_coefficient)
            terms = expanded
        return cls(terms)

    @property
    def terms(self) -> Dict[Key, Scalar]:
        return dict(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda item: tuple(leg.sort_key() for leg in item[0]))

    def map_leg(self, index: int, function: Callable) -> "TensorElement":
        """Apply a linear map to one leg; function sends a leg key to its image."""
        terms: Dict[Key, Scalar] = {}
        for key, coefficient in self._terms.items():
            image = _expand(function(key[index]))
            for leg, leg_coefficient in image.items():
                new_key = key[:index] + (leg,) + key[index + 1 :]
                _add(terms, new_key, coefficient * leg_coefficient)
        return TensorElement(terms)

    def expand_leg(self, index: int, function: Callable) -> "TensorElement":
        """Replace one leg by a tensor of several legs (e.g. a coproduct)."""
        terms: Dict[Key, Scalar] = {}
        for key, coefficient in self._terms.items():
            image = _expand(function(key[index]))
            for legs, leg_coefficient in image.items():
                _add(terms, key[:index] + tuple(legs) + key[index + 1 :], coefficient * leg_coefficient)
        return TensorElement(terms)

    def contract_leg(self, index: int, functional: Callable) -> "TensorElement":
        """Apply a scalar valued functional to one leg, dropping it."""
        terms: Dict[Key, Scalar] = {}
        for key, coefficient in self._terms.items():
            value = functional(key[index])
            if value:
                _add(terms, key[:index] + key[index + 1 :], coefficient * value)
        return TensorElement(terms)

    def to_element(self) -> AlgebraElement:
        """A tensor with a single monomial leg, seen as an algebra element."""
        return AlgebraElement({key[0]: coefficient for key, coefficient in self._terms.items()})

    def to_scalar(self) -> Scalar:
        return self._terms.get((), Scalar())

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        terms = dict(self._terms)
        for key, coefficient in other._terms.items():
            _add(terms, key, coefficient)
        return TensorElement(terms)

    def __neg__(self):
        return TensorElement({key: -coefficient for key, coefficient in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return self._legwise_product(other)
        try:
            factor = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return TensorElement({key: coefficient * factor for key, coefficient in self._terms.items()})

    def __rmul__(self, other):
        try:
            factor = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * factor

    def _legwise_product(self, other: "TensorElement") -> "TensorElement":
        terms: Dict[Key, Scalar] = {}
        for left_key, left_coefficient in self._terms.items():
            for right_key, right_coefficient in other._terms.items():
                if len(left_key) != len(right_key):
                    raise ValueError("tensor product of tensors with different numbers of legs")
                partial: Dict[Key, Scalar] = {(): left_coefficient * right_coefficient}
                for left, right in zip(left_key, right_key):
                    extended: Dict[Key, Scalar] = {}
                    for key, coefficient in partial.items():
                        for product, product_coefficient in multiply_monomials(left, right):
                            _add(extended, key + (product,), coefficient * product_coefficient)
                    partial = extended
                for key, coefficient in partial.items():
                    _add(terms, key, coefficient)
        return TensorElement(terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return format_terms(self.sorted_items(), lambda key: TENSOR_SYMBOL.join(str(leg) for leg in key))

    def __repr__(self):
        return f"TensorElement({self})"
