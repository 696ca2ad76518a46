# Exit codes shared by every command, and the help texts of the command line.

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2

PROGRAM_DESCRIPTION = """
Exact computations in the quantum group SL_q(2,R) over Q(t)(sqrt D), q = t^2:
normal forms, Hopf structure maps, coisotropic quotients and verification suites.
"""
EXPRESSION_HELP = "an element such as 'd a - 1/(t^2) b c'; juxtaposition is the product, q = t^2"
PRESET_HELP = "parameter preset: rplus, s1, special or custom (with --mu and --nu)"
