import logging
import sys
from argparse import ArgumentParser

from commands import register
from commands.command_utils import EXIT_USAGE, EXIT_VERIFICATION_FAILURE, settings_from_args
from commands.command_utils.command_constants import PROGRAM_DESCRIPTION
from coisotropic import ExpansionMismatch
from env_loader import load_environment_variables


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="slq", description=PROGRAM_DESCRIPTION)
    parser.add_argument("--config", help="key = value settings file (default: $SLQ_CONFIG, then ./slq.conf)")
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING or ERROR")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    register(subparsers)
    return parser


def main(argv=None) -> int:
    # Load and normalize environment variables
    load_environment_variables()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = settings_from_args(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=settings.log_level, format="%(levelname)s %(name)s: %(message)s")
    logger = logging.getLogger("slq")

    try:
        return args.callback(args, settings, logger)
    except ExpansionMismatch as e:
        logger.error(f"Expansion check failed: {e}")
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILURE
    except (ValueError, ZeroDivisionError) as e:
        logger.debug(f"{args.command} rejected its input: {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


# Start the command line
if __name__ == "__main__":
    sys.exit(main())
