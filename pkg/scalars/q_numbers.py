from functools import lru_cache

from .scalar import ONE, Scalar, q_pow


@lru_cache(maxsize=None)
def q_number(n: int) -> Scalar:
    """[n]_q = (q^n - q^-n) / (q - q^-1); [-n] = -[n]."""
    if n < 0:
        return -q_number(-n)
    return (q_pow(n) - q_pow(-n)) / (q_pow(1) - q_pow(-1))


@lru_cache(maxsize=None)
def q_factorial(n: int) -> Scalar:
    if n < 0:
        raise ValueError(f"q-factorial of a negative integer: {n}")
    result = ONE
    for k in range(1, n + 1):
        result = result * q_number(k)
    return result


def q_binomial(n: int, k: int) -> Scalar:
    if k < 0 or k > n:
        return Scalar()
    return q_factorial(n) / (q_factorial(k) * q_factorial(n - k))
