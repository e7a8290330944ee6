"""Invariant monitors: closedness of b, scaling covariance, range exclusion."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from pydantic import BaseModel, Field

from mhdforms.exceptions import GridMismatchError
from mhdforms.observability import get_logger
from mhdforms.solver.config import SolverConfig
from mhdforms.solver.nonlinear import induction_dual_path
from mhdforms.solver.picard import picard_solve
from mhdforms.solver.trajectory import MildTrajectory
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.grid import TorusGrid
from mhdforms.spectral.operators import delta_spec, exact_project
from mhdforms.spectral.probes import random_field
from mhdforms.spectral.products import wedge_fields
from mhdforms.symbolic.suites import IdentityReport, run_suite

logger = get_logger(__name__)


def db_monitor(trajectory: MildTrajectory) -> float:
    """max over nodes of ‖db(t_j)‖_∞."""
    return trajectory.closedness_defect()


def range_exclusion_defect(u: SpectralFormField, b: SpectralFormField, fraction: float = 1.0) -> float:
    """Largest coefficient of ℚ δ(u∧b); zero up to roundoff."""
    return exact_project(delta_spec(wedge_fields(u, b, fraction))).max_abs_coefficient()


def check_dual_path(
    dimension: int, points: int, trials: int, seed: int = 0, tolerance: float = 1e-8
) -> IdentityReport:
    """Direct d(u⌟b) against the identity evaluation on random low-mode pairs."""
    grid = TorusGrid(dimension, points)

    def trial(rng: np.random.Generator) -> tuple[bool, int, str, float]:
        u = random_field(grid, 1, rng)
        b = random_field(grid, 2, rng)
        _, defect = induction_dual_path(u, b)
        return defect <= tolerance, 0, f"defect {defect:.3g}", defect

    return run_suite("dual_path", dimension, 0, trials, seed, trial)


class ScalingReport(BaseModel):
    """Relative covariance defects of one rescaled run."""

    scale: float = Field(..., gt=0.0, description="Scaling factor λ")
    time: float = Field(..., ge=0.0, description="Time t on the original run")
    velocity_defect: float = Field(..., ge=0.0)
    magnetic_defect: float = Field(..., ge=0.0)

    @property
    def defect(self) -> float:
        return max(self.velocity_defect, self.magnetic_defect)


def rescale_field(w: SpectralFormField, scale: float) -> SpectralFormField:
    """λ w(λ·) on the torus of period L/λ with the same number of points."""
    grid = w.grid
    target = TorusGrid(grid.dimension, grid.points, grid.period / scale)
    return SpectralFormField(target, w.grade, scale * w.coefficients)


def _relative_defect(expected: np.ndarray, actual: np.ndarray) -> float:
    reference = float(np.sqrt(np.sum(expected**2)))
    difference = float(np.sqrt(np.sum((expected - actual) ** 2)))
    if reference == 0.0:
        return difference
    return difference / reference


def scaling_check(
    u0: SpectralFormField,
    b0: SpectralFormField,
    scale: float,
    t: float,
    config: SolverConfig,
) -> ScalingReport:
    """Compare λu(λ²t, λx) from the original run with the run on 𝕋_{L/λ}.

    Both runs use the same grid size and mesh node count, so node j of the
    rescaled mesh is t_j/λ² and the rescaled grid points are x/λ.

    Raises:
        GridMismatchError: for a non-positive scale
        MeshError: if ``t`` is not a node of the original mesh
    """
    if not scale > 0:
        raise GridMismatchError("scaling factor must be positive", expected="> 0", actual=scale)
    j = config.mesh.index_of(t)
    scaled = config.model_copy(
        update={"period": config.period / scale, "horizon": config.horizon / scale**2}
    )
    with ThreadPoolExecutor(max_workers=2) as pool:
        original = pool.submit(picard_solve, u0, b0, config)
        rescaled = pool.submit(
            picard_solve, rescale_field(u0, scale), rescale_field(b0, scale), scaled
        )
        base, _ = original.result()
        other, _ = rescaled.result()
    report = ScalingReport(
        scale=scale,
        time=float(config.mesh.times[j]),
        velocity_defect=_relative_defect(
            scale * base.velocity[j].to_physical(), other.velocity[j].to_physical()
        ),
        magnetic_defect=_relative_defect(
            scale * base.magnetic[j].to_physical(), other.magnetic[j].to_physical()
        ),
    )
    logger.info(
        "scaling_check",
        scale=scale,
        time=report.time,
        velocity_defect=report.velocity_defect,
        magnetic_defect=report.magnetic_defect,
    )
    return report


__all__ = [
    "ScalingReport",
    "check_dual_path",
    "db_monitor",
    "range_exclusion_defect",
    "rescale_field",
    "scaling_check",
]
