# One parameter set per series type, all with rational discriminant.
from typing import Dict, List, Tuple

from .params import Params

PRESETS: Dict[str, Tuple[str, str]] = {
    "rplus": ("3/2", "1"),
    "s1": ("0", "1"),
    "special": ("1", "1"),
}


class UnknownPreset(ValueError):
    pass


def available_presets() -> List[str]:
    return list(PRESETS)


def get_preset(name: str) -> Params:
    try:
        mu, nu = PRESETS[name.lower()]
    except KeyError:
        raise UnknownPreset(f"Unknown preset: {name} (expected one of {', '.join(PRESETS)})")
    return Params.from_rationals(mu, nu, name=name.lower())


def resolve_preset(name: str, mu=None, nu=None) -> Params:
    """A shipped preset, or the custom parameters (mu, nu) when name is "custom"."""
    if name.lower() == "custom":
        if mu is None or nu is None:
            raise UnknownPreset("the custom preset needs mu and nu")
        return Params.from_rationals(mu, nu, name="custom")
    return get_preset(name)
