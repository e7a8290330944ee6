"""Random band-limited fields and localised probe fields."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from mhdforms.exterior.blades import blades_of_grade
from mhdforms.spectral.field import SpectralFormField, transform_forward
from mhdforms.spectral.grid import TorusGrid


def random_field(
    grid: TorusGrid,
    grade: int,
    rng: np.random.Generator,
    max_mode: int = 2,
    amplitude: float = 1.0,
) -> SpectralFormField:
    """Real random field supported on modes with |m_i| ≤ max_mode.

    Coefficients are standard complex normals; the physical field is
    rescaled so that its largest grid value is ``amplitude``.
    """
    count = len(blades_of_grade(grid.dimension, grade))
    shape = (count,) + grid.spectral_shape
    coefficients = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    band = np.ones(grid.spectral_shape, dtype=bool)
    for m in grid.mode_numbers:
        band = band & (np.abs(m) <= max_mode) & (np.abs(m) < grid.points // 2)
    coefficients = np.where(band, coefficients, 0)
    # round trip through physical space enforces Hermitian symmetry
    values = SpectralFormField(grid, grade, coefficients).to_physical()
    peak = float(np.max(np.abs(values))) or 1.0
    return SpectralFormField.from_physical(grid, grade, values * (amplitude / peak))


def periodic_bump(grid: TorusGrid, width: float, center: Sequence[float] | None = None) -> np.ndarray:
    """Smooth periodic bump exp(Σ (cos(κ(x_i - c_i)) - 1)/(κ width)²), κ = 2π/L.

    Close to a Gaussian of standard deviation ``width`` when width ≪ L.
    """
    kappa = grid.fundamental
    if center is None:
        center = [grid.period / 2] * grid.dimension
    exponent = np.zeros(grid.shape)
    for x, c in zip(grid.coordinates(), center):
        exponent = exponent + (np.cos(kappa * (x - c)) - 1.0) / (kappa * width) ** 2
    return np.exp(exponent)


def gaussian_bump_probe(
    grid: TorusGrid, grade: int, width: float, amplitude: float = 1.0
) -> SpectralFormField:
    """Mean-zero localised probe of the given grade.

    Each blade component is a periodic bump with a component-dependent
    offset and sign, minus its mean, scaled to peak ``amplitude``.
    """
    blades = blades_of_grade(grid.dimension, grade)
    values = np.empty((len(blades),) + grid.shape)
    shift = 0.5 * width
    for position, blade in enumerate(blades):
        center = [
            grid.period / 2 + (shift if axis in blade.indices else -shift)
            for axis in range(1, grid.dimension + 1)
        ]
        bump = periodic_bump(grid, width, center)
        sign = -1.0 if position % 2 else 1.0
        values[position] = sign * (bump - bump.mean())
    peak = float(np.max(np.abs(values))) or 1.0
    return SpectralFormField(grid, grade, transform_forward(grid, values * (amplitude / peak)))


def single_mode(
    grid: TorusGrid,
    grade: int,
    component: int,
    mode: Sequence[int],
    phase: str = "sin",
    amplitude: float = 1.0,
) -> SpectralFormField:
    """One trigonometric mode amplitude·sin(k·x) (or cos) in a single component."""
    count = len(blades_of_grade(grid.dimension, grade))
    values = np.zeros((count,) + grid.shape)
    argument = sum(grid.fundamental * m * x for m, x in zip(mode, grid.coordinates()))
    wave = np.sin(argument) if phase == "sin" else np.cos(argument)
    values[component] = amplitude * np.broadcast_to(wave, grid.shape)
    return SpectralFormField.from_physical(grid, grade, values)


def probe_width_for_horizon(horizon: float, width_factor: float) -> float:
    """Parabolic scaling: width ∝ √T."""
    return width_factor * math.sqrt(horizon)


__all__ = [
    "gaussian_bump_probe",
    "periodic_bump",
    "probe_width_for_horizon",
    "random_field",
    "single_mode",
]
