from argparse import Namespace
from logging import Logger

from env_loader import Settings
from hopf_structure import antipode, coproduct, tau
from pbw_algebra import star

from .command_utils import EXIT_OK, params_from_settings, parse_element

"""
Callbacks for the structure-map commands 'coproduct', 'antipode', 'star' and 'tau'.
Each parses the expression and prints the image of its normal form.
"""

STRUCTURE_MAPS = {
    "coproduct": coproduct,
    "antipode": antipode,
    "star": star,
    "tau": tau,
}


def _apply_structure_map(name: str, args: Namespace, settings: Settings, logger: Logger) -> int:
    element = parse_element(args.expression, params_from_settings(settings))
    image = STRUCTURE_MAPS[name](element)
    logger.debug(f"{name}({element}) computed")
    print(image)
    return EXIT_OK


def coproduct_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    return _apply_structure_map("coproduct", args, settings, logger)


def antipode_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    return _apply_structure_map("antipode", args, settings, logger)


def star_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    return _apply_structure_map("star", args, settings, logger)


def tau_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    return _apply_structure_map("tau", args, settings, logger)
