from argparse import Namespace
from logging import Logger

from env_loader import Settings

from .command_utils import EXIT_OK, params_from_settings, parse_element

"""
Callback for the 'normalize' command. Parses the expression, evaluating parameter
symbols in the configured preset, and prints its normal form in the ordered basis.
"""


def normalize_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    element = parse_element(args.expression, params_from_settings(settings))
    logger.debug(f"normal form of {args.expression!r} has {len(element)} terms")
    print(element)
    return EXIT_OK
