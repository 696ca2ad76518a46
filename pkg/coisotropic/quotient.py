# Reduction modulo the right ideal C A and the left ideal A C, where C is the
# coideal spanned by k1 = a - d + 2 t mu b and k2 = q nu b + c.
#
# Classes are written on the spanning set {b^s, a b^s}. The module action of
# a generator on a written class is given in closed form below; a monomial
# is reduced by folding its letters onto the class of 1 (left to right for
# the right quotient, right to left for the left quotient).

import logging
from enum import Enum
from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

from scalars import ONE, Scalar, q_pow, t_pow
from pbw_algebra import AlgebraElement, Monomial, format_terms
from hopf_structure import TensorElement, coproduct, counit, tau

from .params import Params

logger = logging.getLogger(__name__)


class Side(str, Enum):
    RIGHT = "right"
    LEFT = "left"


class SideMismatch(ValueError):
    pass


class Rep(NamedTuple):
    """The written class of a^a b^b with a in {0, 1}."""

    a: int = 0
    b: int = 0

    def monomial(self) -> Monomial:
        return Monomial(self.a, self.b, 0, 0)

    def sort_key(self):
        return (self.a + self.b, -self.a)

    def __str__(self):
        return str(self.monomial())


ONE_REP = Rep()
RepTerms = Tuple[Tuple[Rep, Scalar], ...]


def _accumulate(terms: Dict[Rep, Scalar], rep: Rep, coefficient: Scalar) -> None:
    updated = terms.get(rep, Scalar()) + coefficient
    if updated:
        terms[rep] = updated
    else:
        terms.pop(rep, None)


@lru_cache(maxsize=None)
def right_act_generator(rep: Rep, generator: str, mu: Scalar, nu: Scalar) -> RepTerms:
    """The written form of [rep] . generator in the right quotient."""
    a, s = rep
    if generator == "b":
        return ((Rep(a, s + 1), ONE),)
    if generator == "c":
        return ((Rep(a, s + 1), -q_pow(1) * nu),)
    if generator == "a":
        if a == 0:
            return ((Rep(1, s), q_pow(-s)),)
        # a^2 = 1 - nu b^2 - 2 t^-1 mu a b modulo the right ideal
        return (
            (Rep(0, s), q_pow(-s)),
            (Rep(0, s + 2), -q_pow(-s) * nu),
            (Rep(1, s + 1), -q_pow(-s) * t_pow(-1) * mu * 2),
        )
    if generator == "d":
        if a == 0:
            return ((Rep(1, s), q_pow(s)), (Rep(0, s + 1), q_pow(s) * t_pow(1) * mu * 2))
        return ((Rep(0, s), q_pow(s)), (Rep(0, s + 2), -q_pow(s + 2) * nu))
    raise ValueError(f"Unknown generator: {generator}")


@lru_cache(maxsize=None)
def left_act_generator(rep: Rep, generator: str, mu: Scalar, nu: Scalar) -> RepTerms:
    """The written form of generator . [rep] in the left quotient."""
    a, s = rep
    if generator == "b":
        return ((Rep(a, s + 1), q_pow(-a)),)
    if generator == "c":
        return ((Rep(a, s + 1), -nu * (q_pow(1) if a == 0 else ONE)),)
    if generator == "a":
        if a == 0:
            return ((Rep(1, s), ONE),)
        # a^2 = 1 - q^2 nu b^2 - 2 t mu a b modulo the left ideal
        return (
            (Rep(0, s), q_pow(2 * s)),
            (Rep(0, s + 2), -q_pow(2 * s + 2) * nu),
            (Rep(1, s + 1), -q_pow(s) * t_pow(1) * mu * 2),
        )
    if generator == "d":
        if a == 0:
            return ((Rep(1, s), q_pow(-2 * s)), (Rep(0, s + 1), q_pow(-s) * t_pow(1) * mu * 2))
        return ((Rep(0, s), ONE), (Rep(0, s + 2), -nu))
    raise ValueError(f"Unknown generator: {generator}")


def _act_letters(terms: Dict[Rep, Scalar], letters, side: Side, mu: Scalar, nu: Scalar) -> Dict[Rep, Scalar]:
    order = letters if side == Side.RIGHT else tuple(reversed(letters))
    act = right_act_generator if side == Side.RIGHT else left_act_generator
    for generator in order:
        acted: Dict[Rep, Scalar] = {}
        for rep, coefficient in terms.items():
            for image, factor in act(rep, generator, mu, nu):
                _accumulate(acted, image, coefficient * factor)
        terms = acted
    return terms


@lru_cache(maxsize=None)
def act_monomial(rep: Rep, monomial: Monomial, side: Side, mu: Scalar, nu: Scalar) -> RepTerms:
    return tuple(_act_letters({rep: ONE}, monomial.letters(), side, mu, nu).items())


def reduce_monomial(monomial: Monomial, p: Params, side: Side = Side.RIGHT) -> Dict[Rep, Scalar]:
    return dict(act_monomial(ONE_REP, monomial, Side(side), p.mu, p.nu))


class QuotientElement:
    """
    A class in the right quotient A / C A or the left quotient A / A C,
    stored on the written spanning set {b^s, a b^s}.
    """

    __slots__ = ("side", "params", "_terms", "_hash")

    def __init__(self, terms: Dict[Rep, Scalar], params: Params, side: Side = Side.RIGHT):
        self.side = Side(side)
        self.params = params
        self._terms = {rep: coefficient for rep, coefficient in terms.items() if coefficient}
        self._hash = None

    @classmethod
    def unit(cls, params: Params, side: Side = Side.RIGHT) -> "QuotientElement":
        return cls({ONE_REP: ONE}, params, side)

    @property
    def terms(self) -> Dict[Rep, Scalar]:
        return dict(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, rep: Rep) -> Scalar:
        return self._terms.get(rep, Scalar())

    def representative(self) -> AlgebraElement:
        return AlgebraElement({rep.monomial(): coefficient for rep, coefficient in self._terms.items()})

    def _check_compatible(self, other: "QuotientElement") -> None:
        if self.side != other.side:
            raise SideMismatch(f"cannot combine a {self.side.value} class with a {other.side.value} class")
        if self.params != other.params:
            raise ValueError(f"cannot combine classes for {self.params} and {other.params}")

    def _new(self, terms: Dict[Rep, Scalar]) -> "QuotientElement":
        return QuotientElement(terms, self.params, self.side)

    def __add__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for rep, coefficient in other._terms.items():
            _accumulate(terms, rep, coefficient)
        return self._new(terms)

    def __neg__(self):
        return self._new({rep: -coefficient for rep, coefficient in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return module_act(self, other, Side.RIGHT)
        try:
            factor = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._new({rep: coefficient * factor for rep, coefficient in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return module_act(self, other, Side.LEFT)
        try:
            factor = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * factor

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self.side == other.side and self.params == other.params and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.side, self.params, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_terms(self.sorted_items())

    def __repr__(self):
        return f"QuotientElement({self.side.value}: {self})"


def _reduce(x: AlgebraElement, p: Params, side: Side) -> QuotientElement:
    terms: Dict[Rep, Scalar] = {}
    for monomial, coefficient in x.terms.items():
        for rep, factor in act_monomial(ONE_REP, monomial, side, p.mu, p.nu):
            _accumulate(terms, rep, coefficient * factor)
    return QuotientElement(terms, p, side)


def right_reduce(x: AlgebraElement, p: Params) -> QuotientElement:
    return _reduce(AlgebraElement.coerce(x), p, Side.RIGHT)


def left_reduce(x: AlgebraElement, p: Params) -> QuotientElement:
    return _reduce(AlgebraElement.coerce(x), p, Side.LEFT)


def reduce_element(x: AlgebraElement, p: Params, side: Side) -> QuotientElement:
    return _reduce(AlgebraElement.coerce(x), p, Side(side))


def module_act(x: QuotientElement, f: AlgebraElement, side: Side = None) -> QuotientElement:
    """
    Act on a class by an algebra element: [y] . f for right classes, f . [y] for left ones.

    Raises:
        SideMismatch: when side is given and differs from the side of the class
    """
    side = x.side if side is None else Side(side)
    if side != x.side:
        raise SideMismatch(f"a {x.side.value} class cannot be acted on from the {side.value}")
    terms: Dict[Rep, Scalar] = {}
    mu, nu = x.params.mu, x.params.nu
    for rep, coefficient in x.terms.items():
        for monomial, factor in AlgebraElement.coerce(f).terms.items():
            for image, image_factor in act_monomial(rep, monomial, side, mu, nu):
                _accumulate(terms, image, coefficient * factor * image_factor)
    return QuotientElement(terms, x.params, side)


def reduce_leg(tensor: TensorElement, index: int, p: Params, side: Side) -> TensorElement:
    """Reduce one monomial leg of a tensor into the quotient."""
    return tensor.map_leg(index, lambda monomial: dict(act_monomial(ONE_REP, monomial, Side(side), p.mu, p.nu)))


def quotient_coproduct(x: QuotientElement) -> TensorElement:
    """(r (x) r) Delta of the representative; legs are written classes."""
    tensor = coproduct(x.representative())
    tensor = reduce_leg(tensor, 0, x.params, x.side)
    return reduce_leg(tensor, 1, x.params, x.side)


def quotient_counit(x: QuotientElement) -> Scalar:
    return counit(x.representative())


def quotient_tau(x: QuotientElement) -> QuotientElement:
    return reduce_element(tau(x.representative()), x.params, x.side)


def class_tensor(*classes: QuotientElement) -> TensorElement:
    """The pure tensor of several classes, comparable with quotient_coproduct output."""
    return TensorElement.pure(*classes)
