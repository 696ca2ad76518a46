from argparse import Namespace

from coisotropic import Params, resolve_preset
from env_loader import Settings, load_settings

"""
Resolves the settings of one invocation: the config file first, then the
command-line flags on top of it. Used by every command callback.
"""

OVERRIDABLE = ("preset", "mu", "nu", "max_n", "workers", "degree_cap", "samples", "seed", "log_level")


def settings_from_args(args: Namespace) -> Settings:
    overrides = {key: getattr(args, key, None) for key in OVERRIDABLE}
    return load_settings(getattr(args, "config", None), **overrides)


def params_from_settings(settings: Settings) -> Params:
    return resolve_preset(settings.preset, settings.mu, settings.nu)
