# Exact Gaussian elimination over the coefficient field on sparse coordinate
# maps {basis key: Scalar}. Keys must be mutually comparable.

import logging
from typing import Dict, Hashable, List, Optional

from .scalar import ONE, Scalar

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, Scalar]


def _axpy(target: Vector, source: Vector, factor: Scalar) -> Vector:
    result = dict(target)
    for key, value in source.items():
        updated = result.get(key, Scalar()) + factor * value
        if updated:
            result[key] = updated
        else:
            result.pop(key, None)
    return result


def _scale(vector: Vector, factor: Scalar) -> Vector:
    return {key: value * factor for key, value in vector.items()}


class Echelon:
    """Row echelon form of a family of vectors, remembering how each pivot row was built."""

    def __init__(self, vectors: List[Vector]):
        self.pivots = []
        for index, vector in enumerate(vectors):
            self._insert(dict(vector), {index: ONE})

    def _insert(self, vector: Vector, combination: Vector) -> None:
        vector, combination = self._reduce(vector, combination)
        if not vector:
            return
        key = min(vector)
        inverse = vector[key].inverse()
        self.pivots.append((key, _scale(vector, inverse), _scale(combination, inverse)))

    def _reduce(self, vector: Vector, combination: Vector):
        for key, pivot_vector, pivot_combination in self.pivots:
            coefficient = vector.get(key)
            if coefficient:
                vector = _axpy(vector, pivot_vector, -coefficient)
                combination = _axpy(combination, pivot_combination, -coefficient)
        return vector, combination

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, target: Vector) -> Optional[Vector]:
        """Negated coefficients {index: -c_i} with sum(c_i * vectors[i]) == target, or None outside the span."""
        residual, combination = self._reduce(dict(target), {})
        if residual:
            return None
        return combination


def rank(vectors: List[Vector]) -> int:
    return Echelon(vectors).rank


def solve_in_span(target: Vector, vectors: List[Vector]) -> Optional[List[Scalar]]:
    """
    Express target as a combination of vectors.

    Args:
        target: The vector to express
        vectors: The spanning family

    Returns:
        A list of coefficients aligned with vectors, or None when target is not in the span
    """
    negated = Echelon(vectors).solve(target)
    if negated is None:
        logger.debug("target is not in the span of the family")
        return None
    return [-negated.get(index, Scalar()) for index in range(len(vectors))]
