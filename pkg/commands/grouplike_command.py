from argparse import Namespace
from dataclasses import replace
from logging import Logger

from coisotropic import Side, left_v_element, v_element, x_element
from env_loader import Settings

from .command_utils import EXIT_OK, params_from_settings

"""
Callbacks for the 'v' and 'x' commands: the group-like class v_n (or its left
mirror) and, for the special series, the skew-primitive class X_n.
"""

SPECIAL_PRESET = "special"


def v_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    p = params_from_settings(settings)
    v_n = v_element(args.n, p) if Side(args.side) == Side.RIGHT else left_v_element(args.n, p)
    logger.info(f"v_{args.n} ({args.side}) for {p} has {len(v_n.terms)} written classes")
    print(v_n)
    return EXIT_OK


def x_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    if getattr(args, "preset", None) is None and settings.preset == Settings.preset:
        # X_n only exists on the special series
        logger.info(f"No preset given, using {SPECIAL_PRESET} instead of {settings.preset}")
        settings = replace(settings, preset=SPECIAL_PRESET)
    p = params_from_settings(settings)
    x_n = x_element(args.n, p)
    logger.info(f"X_{args.n} for {p} has {len(x_n.terms)} written classes")
    print(x_n)
    return EXIT_OK
