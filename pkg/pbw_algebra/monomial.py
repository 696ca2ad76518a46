from typing import NamedTuple, Tuple

GENERATORS = ("a", "b", "c", "d")


class Monomial(NamedTuple):
    """Exponents of the ordered monomial a^a b^b c^c d^d; a and d never both positive."""

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c + self.d

    def is_identity(self) -> bool:
        return self.degree == 0

    def letters(self) -> Tuple[str, ...]:
        return ("a",) * self.a + ("b",) * self.b + ("c",) * self.c + ("d",) * self.d

    def sort_key(self):
        return (self.degree, -self.a, -self.b, -self.c, -self.d)

    def __str__(self):
        if self.is_identity():
            return "1"
        pieces = []
        for name, exponent in zip(GENERATORS, self):
            if exponent == 1:
                pieces.append(name)
            elif exponent > 1:
                pieces.append(f"{name}^{exponent}")
        return " ".join(pieces)


IDENTITY = Monomial()


def generator_monomial(name: str) -> Monomial:
    if name not in GENERATORS:
        raise ValueError(f"Unknown generator: {name}")
    return Monomial(**{name: 1})
