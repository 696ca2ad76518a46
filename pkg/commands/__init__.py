from argparse import ArgumentParser

from coisotropic import Side, available_presets
from suites import get_available_suites

from .command_utils.command_constants import EXPRESSION_HELP, PRESET_HELP
from .normalize_command import normalize_callback
from .hopf_command import antipode_callback, coproduct_callback, star_callback, tau_callback
from .reduce_command import reduce_callback
from .grouplike_command import v_callback, x_callback
from .expand_command import expand_callback
from .verify_command import verify_callback


def _preset_parent() -> ArgumentParser:
    parent = ArgumentParser(add_help=False)
    parent.add_argument("--preset", choices=available_presets() + ["custom"], help=PRESET_HELP)
    parent.add_argument("--mu", help="mu for the custom preset, e.g. 3/2")
    parent.add_argument("--nu", help="nu for the custom preset, e.g. 1")
    return parent


def register(subparsers):
    preset = _preset_parent()

    # Register expression commands
    for name, callback in (
        ("normalize", normalize_callback),
        ("coproduct", coproduct_callback),
        ("antipode", antipode_callback),
        ("star", star_callback),
        ("tau", tau_callback),
    ):
        command = subparsers.add_parser(name, parents=[preset], help=f"print the {name} of an expression")
        command.add_argument("expression", help=EXPRESSION_HELP)
        command.set_defaults(callback=callback)

    command = subparsers.add_parser("reduce", parents=[preset], help="reduce an expression into a quotient")
    command.add_argument("--side", choices=[side.value for side in Side], default=Side.RIGHT.value)
    command.add_argument("expression", help=EXPRESSION_HELP)
    command.set_defaults(callback=reduce_callback)

    # Register quotient commands
    command = subparsers.add_parser("v", parents=[preset], help="print the group-like class v_n")
    command.add_argument("--n", type=int, required=True)
    command.add_argument("--side", choices=[side.value for side in Side], default=Side.RIGHT.value)
    command.set_defaults(callback=v_callback)

    command = subparsers.add_parser("x", parents=[preset], help="print X_n (special series only, the default here)")
    command.add_argument("--n", type=int, required=True)
    command.set_defaults(callback=x_callback)

    command = subparsers.add_parser("expand", parents=[preset], help="expand r[b^s] on the group-like classes")
    command.add_argument("--s", type=int, required=True)
    command.add_argument("--no-verify", action="store_true", help="skip the check against direct reduction")
    command.set_defaults(callback=expand_callback)

    # Register the suite runner
    command = subparsers.add_parser("verify", parents=[preset], help="run a verification suite")
    command.add_argument("suite", choices=list(get_available_suites()))
    command.add_argument("--max-n", dest="max_n", type=int)
    command.add_argument("--degree-cap", dest="degree_cap", type=int)
    command.add_argument("--samples", type=int)
    command.add_argument("--seed", type=int)
    command.add_argument("--workers", type=int)
    command.add_argument("--json", action="store_true", help="print the report as JSON")
    command.add_argument("--output", help="directory to store the JSON report in")
    command.add_argument("--witness-width", dest="witness_width", type=int, default=0)
    command.set_defaults(callback=verify_callback)
