"""Velocity/magnetic trajectories on a time mesh."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from mhdforms.exceptions import GradeError, MeshError
from mhdforms.solver.mesh import TimeMesh
from mhdforms.solver.norms import CriticalNorms, critical_norms
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.grid import TorusGrid
from mhdforms.spectral.operators import d_spec, delta_spec, exact_project, heat_semigroup


@dataclass
class MildTrajectory:
    """u(t_j) and b(t_j) at every node of ``mesh``.

    Attributes:
        mesh: Time nodes 0 = t_0 < ... < t_M = T
        velocity: grade-1 fields, one per node
        magnetic: grade-2 fields, one per node
    """

    mesh: TimeMesh
    velocity: list[SpectralFormField] = field(default_factory=list)
    magnetic: list[SpectralFormField] = field(default_factory=list)

    def __post_init__(self) -> None:
        if len(self.velocity) != len(self.mesh) or len(self.magnetic) != len(self.mesh):
            raise MeshError(
                "trajectory needs one velocity and one magnetic field per node",
                nodes=self.mesh.nodes,
            )
        if any(u.grade != 1 for u in self.velocity):
            raise GradeError("velocity must be a 1-form", expected=1, actual=2)
        if any(b.grade != 2 for b in self.magnetic):
            raise GradeError("magnetic field must be a 2-form", expected=2, actual=1)

    @classmethod
    def linear(
        cls, u0: SpectralFormField, b0: SpectralFormField, mesh: TimeMesh
    ) -> "MildTrajectory":
        """Heat flow of already projected data at every node."""
        return cls(
            mesh,
            [heat_semigroup(float(t), u0) for t in mesh.times],
            [heat_semigroup(float(t), b0) for t in mesh.times],
        )

    @property
    def grid(self) -> TorusGrid:
        return self.velocity[0].grid

    @property
    def times(self) -> np.ndarray:
        return self.mesh.times

    def __len__(self) -> int:
        return len(self.mesh)

    def at(self, t: float) -> tuple[SpectralFormField, SpectralFormField]:
        j = self.mesh.index_of(t)
        return self.velocity[j], self.magnetic[j]

    def pairs(self) -> Iterator[tuple[SpectralFormField, SpectralFormField]]:
        return zip(self.velocity, self.magnetic)

    def norms(self) -> CriticalNorms:
        return critical_norms(self.mesh.times, self.velocity, self.magnetic)

    def divergence_defect(self) -> float:
        """max_j max |δu(t_j)| on the grid."""
        return max(float(np.max(np.abs(delta_spec(u).to_physical()))) for u in self.velocity)

    def exact_range_defect(self) -> float:
        """max_j of the largest coefficient of b - ℚb."""
        return max((b - exact_project(b)).max_abs_coefficient() for b in self.magnetic)

    def closedness_defect(self) -> float:
        """max_j ‖db(t_j)‖_∞."""
        return max(closedness(b) for b in self.magnetic)


def closedness(b: SpectralFormField) -> float:
    """‖db‖_∞ on the grid; zero when 2-forms are top grade."""
    if b.dimension < 3:
        return 0.0
    return float(np.max(np.abs(d_spec(b).to_physical())))


__all__ = ["MildTrajectory", "closedness"]
