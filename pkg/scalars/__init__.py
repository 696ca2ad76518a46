from .ratfunc import PoleAtEvaluationPoint, RATFUNC_FIELD, T, to_qq
from .scalar import (
    ONE,
    SQRT_SYMBOL,
    T_SCALAR,
    ZERO,
    DivisionByZero,
    IncompatibleRadicand,
    Scalar,
    conjugate,
    eval_at_t,
    q_pow,
    scalar_arith,
    sqrt_of,
    t_pow,
)
from .q_numbers import q_binomial, q_factorial, q_number
from .linear_algebra import Echelon, rank, solve_in_span

__all__ = [
    "ONE",
    "RATFUNC_FIELD",
    "SQRT_SYMBOL",
    "T",
    "T_SCALAR",
    "ZERO",
    "DivisionByZero",
    "Echelon",
    "IncompatibleRadicand",
    "PoleAtEvaluationPoint",
    "Scalar",
    "conjugate",
    "divides_laurent",
    "eval_at_t",
    "q_binomial",
    "q_factorial",
    "q_number",
    "q_pow",
    "rank",
    "scalar_arith",
    "solve_in_span",
    "sqrt_of",
    "t_pow",
    "to_qq",
]


def divides_laurent(x: Scalar, y: Scalar) -> bool:
    """True when x / y is again a Laurent polynomial (in both components)."""
    return (Scalar.coerce(x) / Scalar.coerce(y)).is_laurent()
