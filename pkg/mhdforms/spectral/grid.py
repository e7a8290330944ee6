"""Uniform grids on the flat torus Tⁿ_L and their frequency lattices.

Fields are stored through real-to-complex transforms over all spatial
axes, so the spectral arrays have shape ``(N, ..., N, N//2 + 1)``. The
derivative symbol zeroes the Nyquist wavenumber on every axis; the same
symbol defines |k|² everywhere, which keeps d, δ, the Hodge Laplacian
and the semigroups mutually consistent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.fft

from mhdforms.exceptions import GridMismatchError


@dataclass(frozen=True)
class TorusGrid:
    """n-dimensional periodic grid with N points per axis and period L.

    Example:
        >>> grid = TorusGrid(dimension=3, points=16, period=2 * math.pi)
        >>> grid.shape, grid.spectral_shape
        ((16, 16, 16), (16, 16, 9))
    """

    dimension: int
    points: int
    period: float = 2 * math.pi

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise GridMismatchError(
                "torus dimension must be positive", expected=">= 1", actual=self.dimension
            )
        if self.points < 2 or self.points & (self.points - 1):
            raise GridMismatchError(
                "points per axis must be a power of two", expected="power of two", actual=self.points
            )
        if not self.period > 0 or not math.isfinite(self.period):
            raise GridMismatchError(
                "torus period must be positive", expected="> 0", actual=self.period
            )

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.points,) * self.dimension

    @property
    def spectral_shape(self) -> tuple[int, ...]:
        return (self.points,) * (self.dimension - 1) + (self.points // 2 + 1,)

    @property
    def axes(self) -> tuple[int, ...]:
        """Spatial axes of component-stacked arrays (axis 0 is the component)."""
        return tuple(range(1, self.dimension + 1))

    @property
    def spacing(self) -> float:
        return self.period / self.points

    @property
    def cell_volume(self) -> float:
        return self.spacing**self.dimension

    @property
    def volume(self) -> float:
        return self.period**self.dimension

    @property
    def fundamental(self) -> float:
        """Smallest non-zero wavenumber 2π/L."""
        return 2 * math.pi / self.period

    def describe(self) -> tuple[int, int, float]:
        return (self.dimension, self.points, self.period)

    def coordinates(self) -> tuple[np.ndarray, ...]:
        """Broadcastable coordinate arrays x_i = L·j/N."""
        x = self.period * np.arange(self.points) / self.points
        return tuple(
            x.reshape([-1 if axis == i else 1 for axis in range(self.dimension)])
            for i in range(self.dimension)
        )

    def mesh(self) -> tuple[np.ndarray, ...]:
        """Full coordinate arrays of shape :attr:`shape`."""
        return tuple(np.broadcast_to(x, self.shape) for x in self.coordinates())

    @cached_property
    def mode_numbers(self) -> tuple[np.ndarray, ...]:
        """Integer mode numbers per axis, broadcastable to :attr:`spectral_shape`."""
        n, N = self.dimension, self.points
        modes = []
        for i in range(n):
            if i == n - 1:
                m = np.arange(N // 2 + 1)
            else:
                m = np.rint(scipy.fft.fftfreq(N, 1.0 / N)).astype(int)
            modes.append(m.reshape([-1 if axis == i else 1 for axis in range(n)]))
        return tuple(modes)

    @cached_property
    def wavenumbers(self) -> tuple[np.ndarray, ...]:
        """Derivative symbol k_i = 2π m_i / L with the Nyquist mode zeroed."""
        nyquist = self.points // 2
        return tuple(
            np.where(np.abs(m) == nyquist, 0.0, self.fundamental * m) for m in self.mode_numbers
        )

    @cached_property
    def laplacian_symbol(self) -> np.ndarray:
        """|k|² on the full spectral shape."""
        total = np.zeros(self.spectral_shape)
        for k in self.wavenumbers:
            total = total + k**2
        return total

    @cached_property
    def inverse_laplacian_symbol(self) -> np.ndarray:
        """1/|k|² where |k|² > 0, zero on the harmonic modes."""
        symbol = self.laplacian_symbol
        safe = np.where(symbol > 0, symbol, 1.0)
        return np.where(symbol > 0, 1.0 / safe, 0.0)

    @cached_property
    def parseval_weights(self) -> np.ndarray:
        """Multiplicity of each stored half-spectrum mode in the full spectrum."""
        last = np.full(self.points // 2 + 1, 2.0)
        last[0] = 1.0
        last[-1] = 1.0
        return last.reshape([1] * (self.dimension - 1) + [-1])

    def check_same(self, other: "TorusGrid") -> None:
        if self != other:
            raise GridMismatchError(
                "fields live on different torus grids",
                expected=self.describe(),
                actual=other.describe(),
            )


__all__ = ["TorusGrid"]
