import logging
from functools import lru_cache

from scalars import ONE, Scalar, q_pow
from pbw_algebra import IDENTITY, AlgebraElement, Monomial, multiply, star
from pbw_algebra.relations import add_term, left_multiply, multiply_word

from .tensor import TensorElement

logger = logging.getLogger(__name__)

# Delta a = a(x)a + b(x)c, Delta b = a(x)b + b(x)d, Delta c = c(x)a + d(x)c, Delta d = c(x)b + d(x)d
GENERATOR_COPRODUCTS = {
    "a": (("a", "a"), ("b", "c")),
    "b": (("a", "b"), ("b", "d")),
    "c": (("c", "a"), ("d", "c")),
    "d": (("c", "b"), ("d", "d")),
}


@lru_cache(maxsize=None)
def monomial_coproduct(monomial: Monomial) -> TensorElement:
    if monomial.is_identity():
        return TensorElement({(IDENTITY, IDENTITY): ONE})
    letters = monomial.letters()
    first, rest = letters[0], letters[1:]
    tail = Monomial(*(rest.count(name) for name in "abcd"))
    terms = {}
    # left-multiply Delta(first) onto Delta(rest) leg by leg
    for (left, right), coefficient in monomial_coproduct(tail).terms.items():
        for left_generator, right_generator in GENERATOR_COPRODUCTS[first]:
            for left_product, left_factor in left_multiply(left_generator, left):
                for right_product, right_factor in left_multiply(right_generator, right):
                    key = (left_product, right_product)
                    updated = terms.get(key, Scalar()) + coefficient * left_factor * right_factor
                    if updated:
                        terms[key] = updated
                    else:
                        terms.pop(key, None)
    return TensorElement(terms)


def coproduct(x: AlgebraElement) -> TensorElement:
    result = TensorElement.zero()
    for monomial, coefficient in x.terms.items():
        result = result + monomial_coproduct(monomial) * coefficient
    return result


def monomial_counit(monomial: Monomial) -> Scalar:
    return ONE if monomial.b == 0 and monomial.c == 0 else Scalar()


def counit(x: AlgebraElement) -> Scalar:
    total = Scalar()
    for monomial, coefficient in x.terms.items():
        if monomial.b == 0 and monomial.c == 0:
            total = total + coefficient
    return total


@lru_cache(maxsize=None)
def monomial_antipode(monomial: Monomial) -> AlgebraElement:
    r, s, t, u = monomial
    # S(a^r b^s c^t d^u) = S(d)^u S(c)^t S(b)^s S(a)^r with S(a) = d, S(b) = -q^-1 b, S(c) = -q c, S(d) = a
    sign = -1 if (s + t) % 2 else 1
    factor = q_pow(t - s) * sign
    word = ("a",) * u + ("c",) * t + ("b",) * s + ("d",) * r
    terms = {}
    for product, coefficient in multiply_word(word, {IDENTITY: ONE}).items():
        add_term(terms, product, coefficient * factor)
    return AlgebraElement(terms)


def antipode(x: AlgebraElement) -> AlgebraElement:
    result = AlgebraElement.zero()
    for monomial, coefficient in x.terms.items():
        result = result + monomial_antipode(monomial) * coefficient
    return result


def tau(x: AlgebraElement) -> AlgebraElement:
    """The antilinear algebra map star o S."""
    return star(antipode(x))


def iterated_coproduct(x: AlgebraElement) -> TensorElement:
    """(Delta (x) id) Delta."""
    return coproduct(x).expand_leg(0, monomial_coproduct)


def coproduct_second_leg(x: AlgebraElement) -> TensorElement:
    """(id (x) Delta) Delta, the other side of coassociativity."""
    return coproduct(x).expand_leg(1, monomial_coproduct)


def multiply_legs(tensor: TensorElement) -> AlgebraElement:
    """The multiplication map on A (x) A."""
    result = AlgebraElement.zero()
    for (left, right), coefficient in tensor.terms.items():
        result = result + multiply(AlgebraElement.monomial(left), AlgebraElement.monomial(right)) * coefficient
    return result


def apply_legs(tensor: TensorElement, *maps) -> TensorElement:
    """(f_1 (x) f_2 (x) ...) applied to a tensor; each map takes and returns AlgebraElements."""
    for index, linear_map in enumerate(maps):
        tensor = tensor.map_leg(index, lambda monomial, f=linear_map: f(AlgebraElement.monomial(monomial)))
    return tensor


def tensor_star(tensor: TensorElement) -> TensorElement:
    """(* (x) *) is antilinear, so the coefficient is conjugated once."""
    terms = {}
    for key, coefficient in tensor.terms.items():
        pure = TensorElement.pure(*(star(AlgebraElement.monomial(leg)) for leg in key))
        for image_key, image_coefficient in pure.terms.items():
            updated = terms.get(image_key, Scalar()) + coefficient.conjugate() * image_coefficient
            if updated:
                terms[image_key] = updated
            else:
                terms.pop(image_key, None)
    return TensorElement(terms)
