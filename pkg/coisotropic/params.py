import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from scalars import Scalar, sqrt_of, to_qq

logger = logging.getLogger(__name__)


class SeriesType(str, Enum):
    RPLUS = "Rplus"
    S1 = "S1"
    SPECIAL = "Special"
    GENERAL = "General"


@dataclass(frozen=True)
class Params:
    """
    The coideal parameters (mu, nu) and the quantities derived from them.

    When mu and nu are rational, D = mu^2 - nu is rational and
    chi_+/- = mu +/- sqrt(D) live in Q(t)(sqrt(radicand)); the radicand
    defaults to D and is inherited by every parameter set derived from this
    one, so shifted and transported parameters stay in one field.
    """

    mu: Scalar
    nu: Scalar
    name: str = field(default="custom", compare=False)
    radicand: Optional[object] = field(default=None, compare=False)
    discriminant: Scalar = field(init=False, compare=False, repr=False)
    sqrt_discriminant: Optional[Scalar] = field(init=False, compare=False, repr=False)
    chi_plus: Optional[Scalar] = field(init=False, compare=False, repr=False)
    chi_minus: Optional[Scalar] = field(init=False, compare=False, repr=False)
    series_type: SeriesType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        mu, nu = Scalar.coerce(self.mu), Scalar.coerce(self.nu)
        if not mu.is_real() or not nu.is_real():
            raise ValueError(f"mu = {mu} and nu = {nu} must be real")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        discriminant = mu * mu - nu
        object.__setattr__(self, "discriminant", discriminant)

        if not (mu.is_constant() and nu.is_constant() and not mu.rad and not nu.rad):
            for name in ("sqrt_discriminant", "chi_plus", "chi_minus"):
                object.__setattr__(self, name, None)
            object.__setattr__(self, "series_type", SeriesType.GENERAL)
            return

        value = discriminant.as_rational()
        radicand = to_qq(self.radicand) if self.radicand is not None else value
        object.__setattr__(self, "radicand", radicand)
        root = sqrt_of(value, radicand if radicand else None) if value else Scalar()
        object.__setattr__(self, "sqrt_discriminant", root)
        object.__setattr__(self, "chi_plus", mu + root)
        object.__setattr__(self, "chi_minus", mu - root)
        if value > 0:
            series_type = SeriesType.RPLUS
        elif value < 0:
            series_type = SeriesType.S1
        else:
            series_type = SeriesType.SPECIAL
        object.__setattr__(self, "series_type", series_type)

    @classmethod
    def from_rationals(cls, mu, nu, name: str = "custom", radicand=None) -> "Params":
        return cls(Scalar.from_rational(mu), Scalar.from_rational(nu), name=name, radicand=radicand)

    def with_values(self, mu, nu, name: Optional[str] = None) -> "Params":
        """Parameters in the same coefficient field, e.g. shifted or transported ones."""
        return Params(Scalar.coerce(mu), Scalar.coerce(nu), name=name or f"{self.name}'", radicand=self.radicand)

    @property
    def theta(self) -> Scalar:
        return self.nu - self.mu * self.mu

    @property
    def is_special(self) -> bool:
        return self.series_type == SeriesType.SPECIAL

    @property
    def discriminant_sign(self) -> Optional[int]:
        if self.series_type == SeriesType.GENERAL:
            return None
        value = self.discriminant.as_rational()
        return (value > 0) - (value < 0)

    def chi(self, sign: int) -> Scalar:
        """chi_sigma for sigma = +1 or -1."""
        if self.chi_plus is None:
            raise ValueError(f"chi is not available for non-rational parameters ({self.name})")
        return self.chi_plus if sign >= 0 else self.chi_minus

    @property
    def sqrt_symbol(self) -> Scalar:
        """The value printed as sqrtD: the square root of the square-free part of D."""
        root = self.sqrt_discriminant
        if root is None or not root.rad:
            return root
        return Scalar(0, 1, root.radicand)

    def symbol_values(self) -> dict:
        """Values of the parameter symbols accepted by the expression parser."""
        values = {"mu": self.mu, "nu": self.nu}
        if self.chi_plus is not None:
            values.update({"chip": self.chi_plus, "chim": self.chi_minus, "sqrtD": self.sqrt_symbol})
        return values

    def __str__(self):
        return f"{self.name} (mu = {self.mu}, nu = {self.nu})"
