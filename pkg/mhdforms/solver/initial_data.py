"""Builders for initial velocity and magnetic fields.

    zero            u = 0 or b = 0
    taylor_green    u = A(sin x1 cos x2 Π cos, -cos x1 sin x2 Π cos, 0, ...)
    exact_potential b = d a with a_i = A sin(k x_{i+1}) (indices cyclic)
    random          band-limited random field, projected afterwards
    file            snapshot written by :func:`mhdforms.spectral.io.save_field`
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from mhdforms.exceptions import GradeError
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.grid import TorusGrid
from mhdforms.spectral.io import load_field
from mhdforms.spectral.operators import d_spec
from mhdforms.spectral.probes import random_field

Builder = Literal["zero", "taylor_green", "exact_potential", "random", "file"]


class FieldSpec(BaseModel):
    """How to build one initial field."""

    builder: Builder = Field("zero", description="Builder name")
    amplitude: float = Field(0.0, description="Peak amplitude")
    mode: int = Field(1, ge=1, description="Mode number of the analytic builders")
    max_mode: int = Field(2, ge=1, description="Band limit of the random builder")
    path: Path | None = Field(None, description="Snapshot file for the file builder")

    model_config = ConfigDict(extra="forbid")


def taylor_green_velocity(grid: TorusGrid, amplitude: float, mode: int = 1) -> SpectralFormField:
    """Divergence-free Taylor-Green-like 1-form."""
    k = grid.fundamental * mode
    x = grid.coordinates()
    spectator = np.ones(grid.shape)
    for xi in x[2:]:
        spectator = spectator * np.cos(k * xi)
    values = np.zeros((grid.dimension,) + grid.shape)
    values[0] = amplitude * np.sin(k * x[0]) * np.cos(k * x[1]) * spectator
    values[1] = -amplitude * np.cos(k * x[0]) * np.sin(k * x[1]) * spectator
    return SpectralFormField.from_physical(grid, 1, values)


def sinusoidal_potential(grid: TorusGrid, amplitude: float, mode: int = 1) -> SpectralFormField:
    """1-form a with a_i = A sin(k x_{i+1}), cyclic in i."""
    k = grid.fundamental * mode
    x = grid.coordinates()
    n = grid.dimension
    values = np.stack(
        [np.broadcast_to(amplitude * np.sin(k * x[(i + 1) % n]), grid.shape) for i in range(n)]
    )
    return SpectralFormField.from_physical(grid, 1, values)


def exact_magnetic(grid: TorusGrid, amplitude: float, mode: int = 1) -> SpectralFormField:
    """b = d a for the sinusoidal potential; closed and exact by construction."""
    potential = sinusoidal_potential(grid, 1.0, mode)
    b = d_spec(potential)
    peak = float(np.max(np.abs(b.to_physical()))) or 1.0
    return b * (amplitude / peak)


def build_field(
    entry: FieldSpec, grid: TorusGrid, grade: int, rng: np.random.Generator
) -> SpectralFormField:
    """Build a grade-1 or grade-2 initial field from ``entry``."""
    if entry.builder == "zero" or (entry.amplitude == 0.0 and entry.builder != "file"):
        return SpectralFormField.zeros(grid, grade)
    if entry.builder == "taylor_green":
        if grade != 1:
            raise GradeError("taylor_green builds velocities", expected=1, actual=grade)
        return taylor_green_velocity(grid, entry.amplitude, entry.mode)
    if entry.builder == "exact_potential":
        if grade != 2:
            raise GradeError("exact_potential builds magnetic fields", expected=2, actual=grade)
        return exact_magnetic(grid, entry.amplitude, entry.mode)
    if entry.builder == "random":
        return random_field(grid, grade, rng, max_mode=entry.max_mode, amplitude=entry.amplitude)
    if entry.path is None:
        raise FileNotFoundError("file builder needs a path")
    field = load_field(entry.path)
    grid.check_same(field.grid)
    if field.grade != grade:
        raise GradeError("snapshot has the wrong grade", expected=grade, actual=field.grade)
    return field


def build_initial_data(
    velocity: FieldSpec, magnetic: FieldSpec, grid: TorusGrid, seed: int
) -> tuple[SpectralFormField, SpectralFormField]:
    """(u0, b0) for the given specs; random builders draw from ``seed``."""
    velocity_rng, magnetic_rng = (np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(2))
    return (
        build_field(velocity, grid, 1, velocity_rng),
        build_field(magnetic, grid, 2, magnetic_rng),
    )


__all__ = [
    "FieldSpec",
    "build_field",
    "build_initial_data",
    "exact_magnetic",
    "sinusoidal_potential",
    "taylor_green_velocity",
]
