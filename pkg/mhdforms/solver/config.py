"""Numerical parameters of a mild-solution run."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator

from mhdforms.solver.mesh import TimeMesh, graded_mesh
from mhdforms.spectral.grid import TorusGrid


class SolverConfig(BaseModel):
    """Grid, time mesh and Picard settings.

    The torus is 𝕋ⁿ_L with ``grid_points`` per axis; the time mesh is
    t_j = T(j/M)^γ with M = ``mesh_nodes`` and γ = ``grading``.
    """

    dimension: int = Field(3, description="Spatial dimension n", ge=2, le=6)
    grid_points: int = Field(16, description="Grid points per axis (power of two)", ge=4)
    period: float = Field(2 * math.pi, description="Torus period L", gt=0.0)
    horizon: float = Field(1.0, description="Time horizon T", gt=0.0)
    mesh_nodes: int = Field(64, description="Number of mesh intervals M", ge=1)
    grading: float = Field(2.0, description="Mesh grading exponent γ", ge=1.0)
    dealias_fraction: float = Field(
        2.0 / 3.0, description="Fraction of the half-band kept after products", gt=0.0, le=1.0
    )
    max_iterations: int = Field(50, description="Picard iteration cap", ge=1)
    tolerance: float = Field(1e-10, description="Stop when the X_T distance drops below", gt=0.0)
    seed: int = Field(0, description="Seed for random initial data and probes", ge=0)
    relaxation: float = Field(
        1.0, description="Picard relaxation ω (1 = plain iteration)", gt=0.0, le=1.0
    )
    nonlinear: bool = Field(True, description="Include the bilinear terms")
    growth_limit: int = Field(
        3, description="Consecutive distance increases tolerated before giving up", ge=1
    )
    min_horizon: float = Field(1e-10, description="Smallest horizon the search may try", gt=0.0)
    max_halvings: int = Field(40, description="Cap on horizon halvings", ge=0)
    consistency_tolerance: float = Field(
        1e-8, description="Relative tolerance of the dual-path induction check", gt=0.0
    )
    singular_weight: float = Field(
        0.0,
        description=(
            "Power β of the s^{-β} weight integrated exactly by the Duhamel quadrature; "
            "the default 0 uses the smooth-source product quadrature"
        ),
        ge=0.0,
        lt=1.0,
    )

    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    @field_validator("grid_points")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            raise ValueError(f"grid_points must be a power of two, got {value}")
        return value

    @field_validator("period", "horizon")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value

    @property
    def grid(self) -> TorusGrid:
        return TorusGrid(self.dimension, self.grid_points, self.period)

    @property
    def mesh(self) -> TimeMesh:
        return graded_mesh(self.horizon, self.mesh_nodes, self.grading)


__all__ = ["SolverConfig"]
