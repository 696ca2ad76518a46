from .command_constants import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILURE
from .command_context import params_from_settings, settings_from_args
from .expression_parser import (
    ExpressionDomainError,
    ExpressionSyntaxError,
    evaluate,
    parse_element,
    parse_expression,
    tokenize,
)

__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VERIFICATION_FAILURE",
    "ExpressionDomainError",
    "ExpressionSyntaxError",
    "evaluate",
    "params_from_settings",
    "parse_element",
    "parse_expression",
    "settings_from_args",
    "tokenize",
]
