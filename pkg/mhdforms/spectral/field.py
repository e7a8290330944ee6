"""Grade-ℓ form fields on the torus stored as Fourier coefficients.

Coefficients are true Fourier coefficients (forward transform scaled by
1/Nⁿ), one array per blade in :func:`blades_of_grade` order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
import scipy.fft

from mhdforms.exceptions import GradeError, GridMismatchError, IndexRangeError
from mhdforms.exterior.blades import Blade, blade_positions, blades_of_grade
from mhdforms.spectral.grid import TorusGrid

# scipy.fft worker threads; -1 uses every core
FFT_WORKERS = -1


def transform_forward(grid: TorusGrid, values: np.ndarray) -> np.ndarray:
    """Real component-stacked grid values -> half-spectrum coefficients."""
    expected = values.shape[:1] + grid.shape
    if values.shape != expected or values.ndim != grid.dimension + 1:
        raise GridMismatchError(
            "physical array does not match the grid", expected=expected, actual=values.shape
        )
    return scipy.fft.rfftn(values, axes=grid.axes, norm="forward", workers=FFT_WORKERS)


def transform_inverse(grid: TorusGrid, coefficients: np.ndarray) -> np.ndarray:
    """Half-spectrum coefficients -> real component-stacked grid values."""
    expected = coefficients.shape[:1] + grid.spectral_shape
    if coefficients.shape != expected or coefficients.ndim != grid.dimension + 1:
        raise GridMismatchError(
            "spectral array does not match the grid",
            expected=expected,
            actual=coefficients.shape,
        )
    return scipy.fft.irfftn(
        coefficients, s=grid.shape, axes=grid.axes, norm="forward", workers=FFT_WORKERS
    )


@dataclass(frozen=True, eq=False)
class SpectralFormField:
    """A real grade-ℓ form field on a torus grid.

    Attributes:
        grid: The torus grid
        grade: Form degree ℓ
        coefficients: complex array of shape (C(n, ℓ), *grid.spectral_shape)
    """

    grid: TorusGrid
    grade: int
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        n = self.grid.dimension
        if self.grade < 0 or self.grade > n:
            raise IndexRangeError(
                f"grade {self.grade} outside 0..{n}", value=self.grade, dimension=n
            )
        expected = (len(blades_of_grade(n, self.grade)),) + self.grid.spectral_shape
        if self.coefficients.shape != expected:
            raise GridMismatchError(
                "coefficient array does not match grid and grade",
                expected=expected,
                actual=self.coefficients.shape,
            )

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, grid: TorusGrid, grade: int) -> "SpectralFormField":
        count = len(blades_of_grade(grid.dimension, grade))
        return cls(grid, grade, np.zeros((count,) + grid.spectral_shape, dtype=complex))

    @classmethod
    def from_physical(cls, grid: TorusGrid, grade: int, values: np.ndarray) -> "SpectralFormField":
        """Transform real grid values of shape (C(n, ℓ), *grid.shape)."""
        values = np.asarray(values, dtype=float)
        count = len(blades_of_grade(grid.dimension, grade))
        if values.shape[:1] != (count,):
            raise GridMismatchError(
                "physical array needs one slice per blade",
                expected=(count,) + grid.shape,
                actual=values.shape,
            )
        return cls(grid, grade, transform_forward(grid, values))

    # -- views ------------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self.grid.dimension

    @property
    def blades(self) -> tuple[Blade, ...]:
        return blades_of_grade(self.grid.dimension, self.grade)

    def to_physical(self) -> np.ndarray:
        return transform_inverse(self.grid, self.coefficients)

    def component(self, blade: Blade | tuple[int, ...]) -> np.ndarray:
        """Spectral coefficients of one blade component."""
        if not isinstance(blade, Blade):
            blade = Blade.from_indices(blade)
        positions = blade_positions(self.dimension, self.grade)
        if blade.mask not in positions:
            raise GradeError(
                f"{blade} is not a grade-{self.grade} blade", expected=self.grade, actual=blade.grade
            )
        return self.coefficients[positions[blade.mask]]

    def with_coefficients(self, coefficients: np.ndarray, grade: int | None = None) -> "SpectralFormField":
        return SpectralFormField(self.grid, self.grade if grade is None else grade, coefficients)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "SpectralFormField") -> None:
        self.grid.check_same(other.grid)
        if self.grade != other.grade:
            raise GradeError("fields of different grade", expected=self.grade, actual=other.grade)

    def __add__(self, other: "SpectralFormField") -> "SpectralFormField":
        self._check(other)
        return self.with_coefficients(self.coefficients + other.coefficients)

    def __sub__(self, other: "SpectralFormField") -> "SpectralFormField":
        self._check(other)
        return self.with_coefficients(self.coefficients - other.coefficients)

    def __neg__(self) -> "SpectralFormField":
        return self.with_coefficients(-self.coefficients)

    def __mul__(self, factor: Any) -> "SpectralFormField":
        if isinstance(factor, SpectralFormField):
            return NotImplemented
        return self.with_coefficients(factor * self.coefficients)

    __rmul__ = __mul__

    def max_abs_coefficient(self) -> float:
        return float(np.max(np.abs(self.coefficients))) if self.coefficients.size else 0.0


__all__ = [
    "FFT_WORKERS",
    "SpectralFormField",
    "transform_forward",
    "transform_inverse",
]
