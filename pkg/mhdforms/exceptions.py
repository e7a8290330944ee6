"""
mhdforms - Custom Exceptions

Exception hierarchy shared by the algebra, spectral and solver layers.
Every exception carries the structured attributes a caller needs to
report the failure without parsing the message.
"""

from __future__ import annotations

from typing import Sequence


class MHDFormsError(Exception):
    """
    Base exception for all mhdforms errors.

    Catch this to handle any library failure in one place; the CLI maps
    the subclasses to exit codes.
    """


# ---------------------------------------------------------------------------
# Algebra
# ---------------------------------------------------------------------------


class DimensionMismatchError(MHDFormsError):
    """
    Raised when two operands live in exterior algebras of different dimension.

    Attributes:
        left: Dimension of the first operand
        right: Dimension of the second operand

    Example:
        >>> raise DimensionMismatchError(
        ...     message="wedge of Λ(R^3) and Λ(R^4) elements",
        ...     left=3,
        ...     right=4,
        ... )
    """

    def __init__(self, message: str, left: int, right: int):
        super().__init__(message)
        self.left = left
        self.right = right


class GradeError(MHDFormsError):
    """
    Raised when an operand does not have the grade an operation requires.

    Attributes:
        expected: Required grade (or description of the admissible grades)
        actual: Grades found on the operand
    """

    def __init__(self, message: str, expected: int | str, actual: Sequence[int] | int):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class UnitNormError(MHDFormsError):
    """
    Raised when a vector expected to be a unit normal is not normalised.

    Attributes:
        norm_squared: Squared euclidean norm that was found
        tolerance: Accepted deviation from 1 (0 for exact arithmetic)
    """

    def __init__(self, message: str, norm_squared: float, tolerance: float):
        super().__init__(message)
        self.norm_squared = norm_squared
        self.tolerance = tolerance


class IndexRangeError(MHDFormsError):
    """
    Raised for blade indices or grades outside the admissible range.

    Attributes:
        value: Offending index, grade or shape
        dimension: Dimension n of the ambient algebra
    """

    def __init__(self, message: str, value: object, dimension: int):
        super().__init__(message)
        self.value = value
        self.dimension = dimension


# ---------------------------------------------------------------------------
# Spectral
# ---------------------------------------------------------------------------


class GridMismatchError(MHDFormsError):
    """
    Raised when arrays or fields do not share the expected torus grid.

    Attributes:
        expected: Expected grid description (shape or grid tuple)
        actual: Grid description that was supplied
    """

    def __init__(self, message: str, expected: object, actual: object):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class ExponentRelationError(MHDFormsError):
    """
    Raised when integrability exponents violate 1/q = 1/p - alpha/n.

    Attributes:
        p: Source integrability
        q: Target integrability
        alpha: Smoothing exponent
        dimension: Dimension n
    """

    def __init__(self, message: str, p: float, q: float, alpha: float, dimension: int):
        super().__init__(message)
        self.p = p
        self.q = q
        self.alpha = alpha
        self.dimension = dimension


class NegativeTimeError(MHDFormsError):
    """Raised when a semigroup is evaluated at a negative time."""

    def __init__(self, message: str, time: float):
        super().__init__(message)
        self.time = time


# ---------------------------------------------------------------------------
# Solver
# ---------------------------------------------------------------------------


class MeshError(MHDFormsError):
    """
    Raised when a time is not a node of the mesh or a trajectory is incomplete.

    Attributes:
        time: Requested time (None when the mesh itself is invalid)
        nodes: Number of nodes in the mesh
    """

    def __init__(self, message: str, time: float | None = None, nodes: int = 0):
        super().__init__(message)
        self.time = time
        self.nodes = nodes


class NumericalConsistencyError(MHDFormsError):
    """
    Raised when two independent evaluations of the same quantity disagree.

    Attributes:
        quantity: Name of the quantity that was computed twice
        defect: Relative disagreement that was measured
        tolerance: Accepted relative disagreement
    """

    def __init__(self, message: str, quantity: str, defect: float, tolerance: float):
        super().__init__(message)
        self.quantity = quantity
        self.defect = defect
        self.tolerance = tolerance


class SolverConvergenceError(MHDFormsError):
    """Base class for fixed-point and horizon-search failures (CLI exit 2)."""


class NonContractionError(SolverConvergenceError):
    """
    Raised when the Picard iteration stops contracting.

    Attributes:
        distances: Successive X_T distances up to the failure
        suggestion: Human-readable remedy

    Example:
        >>> raise NonContractionError(
        ...     message="distance grew for 3 consecutive iterations",
        ...     distances=[1.0, 2.0, 4.0, 8.0],
        ... )
    """

    def __init__(
        self,
        message: str,
        distances: Sequence[float],
        suggestion: str = "reduce the initial-data amplitude or the horizon T",
    ):
        super().__init__(f"{message}; {suggestion}")
        self.distances = list(distances)
        self.suggestion = suggestion


class HorizonUnderflowError(SolverConvergenceError):
    """
    Raised when the horizon search cannot reach the target smallness.

    Attributes:
        horizons: Horizons tried, in order
        norms: Measured initial-data norms for those horizons
        target: Requested smallness epsilon
    """

    def __init__(
        self,
        message: str,
        horizons: Sequence[float],
        norms: Sequence[float],
        target: float,
    ):
        super().__init__(message)
        self.horizons = list(horizons)
        self.norms = list(norms)
        self.target = target


__all__ = [
    "MHDFormsError",
    "DimensionMismatchError",
    "GradeError",
    "UnitNormError",
    "IndexRangeError",
    "GridMismatchError",
    "ExponentRelationError",
    "NegativeTimeError",
    "MeshError",
    "NumericalConsistencyError",
    "SolverConvergenceError",
    "NonContractionError",
    "HorizonUnderflowError",
]
