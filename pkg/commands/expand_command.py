from argparse import Namespace
from logging import Logger

from coisotropic import expand_bs
from env_loader import Settings
from pbw_algebra import format_terms

from .command_utils import EXIT_OK, params_from_settings

"""
Callback for the 'expand' command. Prints r[b^s] as a combination of the group-like
classes v_s, v_(s-2), ..., v_(-s), after checking the expansion against reduction.
"""


def expand_callback(args: Namespace, settings: Settings, logger: Logger) -> int:
    if args.s < 0:
        raise ValueError(f"--s must be nonnegative, got {args.s}")
    p = params_from_settings(settings)
    expansion = expand_bs(args.s, p, verify=not args.no_verify)
    items = [(args.s - 2 * k, coefficient) for k, coefficient in sorted(expansion.coefficients.items())]
    print(f"r[b^{args.s}] = {format_terms(items, lambda n: f'v_{n}')}")
    return EXIT_OK
