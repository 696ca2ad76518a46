from argparse import Namespace
from logging import Logger

from coisotropic import Side, reduce_element
from env_loader import Settings

from .command_utils import EXIT_OK, params_from_settings, parse_element

"""
Callback for the 'reduce' command. Prints the written representative of the class
of the expression in the right (r) or left (l) quotient of the configured preset.
"""


def reduce_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    p = params_from_settings(settings)
    element = parse_element(args.expression, p)
    reduced = reduce_element(element, p, Side(args.side))
    logger.info(f"reduced {element} on the {args.side} for {p}")
    print(reduced)
    return EXIT_OK
