"""Picard iteration for the mild MHD system.

    u = S(t)u0 - ∫ S ℙ (u·∇)u + ∫ S ℙ (δb ⌟ b)
    b = M(t)b0 + ∫ M ℚ d(u ⌟ b)

Iterates are streamed node by node: iteration m+1 reads the stored
iterate m at t_j, feeds the nonlinear sources to two Duhamel
accumulators and emits the new iterate at t_j. Only two trajectories are
held at a time.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, Field

from mhdforms.exceptions import NonContractionError
from mhdforms.observability import get_logger
from mhdforms.solver.config import SolverConfig
from mhdforms.solver.duhamel import DuhamelAccumulator
from mhdforms.solver.kernels import DuhamelWeights
from mhdforms.solver.mesh import TimeMesh
from mhdforms.solver.nonlinear import induction_dual_path, nonlin_convection, nonlin_induction, nonlin_lorentz
from mhdforms.solver.norms import NormAccumulator
from mhdforms.solver.trajectory import MildTrajectory, closedness
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.operators import Semigroup, exact_project, heat_semigroup, leray_project
from mhdforms.spectral.products import dealias

logger = get_logger(__name__)


class IterationRecord(BaseModel):
    """Diagnostics of one Picard sweep."""

    iteration: int = Field(..., ge=1)
    distance: float = Field(..., description="Product-space distance to the previous iterate")
    ratio: float | None = Field(None, description="distance / previous distance")
    db_monitor: float = Field(0.0, ge=0.0, description="max_j ‖db(t_j)‖_∞ of the new iterate")
    dual_path_defect: float = Field(
        0.0, ge=0.0, description="Relative defect of the two induction evaluations at T"
    )
    measured_constant: float = Field(
        0.0, ge=0.0, description="‖nonlinear part‖ / ‖previous iterate‖²"
    )


class IterationLog(BaseModel):
    """Per-iteration history of one solve."""

    horizon: float = Field(..., gt=0.0)
    records: list[IterationRecord] = Field(default_factory=list)
    converged: bool = False
    relaxation: float = 1.0

    @property
    def iterations(self) -> int:
        return len(self.records)

    @property
    def distances(self) -> list[float]:
        return [r.distance for r in self.records]

    @property
    def ratios(self) -> list[float]:
        return [r.ratio for r in self.records if r.ratio is not None]

    @property
    def residual(self) -> float:
        return self.records[-1].distance if self.records else 0.0


def prepare_initial_data(
    u0: SpectralFormField, b0: SpectralFormField, fraction: float
) -> tuple[SpectralFormField, SpectralFormField]:
    """Project onto the natural domains and truncate to the dealiasing box."""
    return dealias(leray_project(u0), fraction), dealias(exact_project(b0), fraction)


def picard_solve(
    u0: SpectralFormField,
    b0: SpectralFormField,
    config: SolverConfig,
    mesh: TimeMesh | None = None,
) -> tuple[MildTrajectory, IterationLog]:
    """Iterate U^{m+1} = U⁰ + (B1 + B2, B3)(U^m) until the distance is below tolerance.

    Returns the last iterate and the log; ``log.converged`` is False when
    the iteration cap is hit first.

    Raises:
        NonContractionError: after ``growth_limit`` consecutive distance
            increases or on a non-finite distance
        NumericalConsistencyError: if the two induction evaluations disagree
    """
    grid = config.grid
    grid.check_same(u0.grid)
    grid.check_same(b0.grid)
    mesh = mesh or config.mesh
    fraction = config.dealias_fraction
    u0, b0 = prepare_initial_data(u0, b0, fraction)
    log = IterationLog(horizon=mesh.horizon, relaxation=config.relaxation)
    current = MildTrajectory.linear(u0, b0, mesh)

    if not config.nonlinear:
        log.records.append(IterationRecord(iteration=1, distance=0.0))
        log.converged = True
        logger.info("picard_linear_only", horizon=mesh.horizon)
        return current, log

    omega = config.relaxation
    if omega != 1.0:
        logger.warning("picard_relaxation_enabled", relaxation=omega)
    weights = DuhamelWeights(grid.laplacian_symbol, mesh, config.singular_weight)
    previous_distance: float | None = None
    growths = 0

    for iteration in range(1, config.max_iterations + 1):
        velocity_acc = DuhamelAccumulator(Semigroup.STOKES, grid, 1, mesh, weights=weights)
        magnetic_acc = DuhamelAccumulator(Semigroup.MAXWELL, grid, 2, mesh, weights=weights)
        distance = NormAccumulator()
        nonlinear_part = NormAccumulator()
        size = NormAccumulator()
        size.update(0.0, current.velocity[0], current.magnetic[0])
        new_velocity, new_magnetic = [u0], [b0]
        db_monitor = closedness(b0)
        dual_defect = 0.0

        for j in range(1, len(mesh)):
            t = float(mesh.times[j])
            u, b = current.velocity[j], current.magnetic[j]
            velocity_source = nonlin_lorentz(b, fraction) - nonlin_convection(u, fraction)
            if j == mesh.nodes:
                magnetic_source, dual_defect = induction_dual_path(
                    u, b, fraction, config.consistency_tolerance
                )
            else:
                magnetic_source = nonlin_induction(u, b, fraction)
            du = velocity_acc.advance(velocity_source)
            db = magnetic_acc.advance(magnetic_source)
            next_u = heat_semigroup(t, u0) + du
            next_b = heat_semigroup(t, b0) + db
            if omega != 1.0:
                next_u = omega * next_u + (1.0 - omega) * u
                next_b = omega * next_b + (1.0 - omega) * b
            distance.update(t, next_u - u, next_b - b)
            nonlinear_part.update(t, du, db)
            size.update(t, u, b)
            db_monitor = max(db_monitor, closedness(next_b))
            new_velocity.append(next_u)
            new_magnetic.append(next_b)

        current = MildTrajectory(mesh, new_velocity, new_magnetic)
        value = distance.total
        ratio = value / previous_distance if previous_distance else None
        scale = size.total
        constant = nonlinear_part.total / scale**2 if scale > 0 else 0.0
        record = IterationRecord(
            iteration=iteration,
            distance=value,
            ratio=ratio,
            db_monitor=db_monitor if math.isfinite(db_monitor) else 0.0,
            dual_path_defect=dual_defect if math.isfinite(dual_defect) else 0.0,
            measured_constant=constant if math.isfinite(constant) else 0.0,
        )
        log.records.append(record)
        logger.info(
            "picard_iteration",
            iteration=iteration,
            distance=value,
            ratio=ratio,
            db_monitor=record.db_monitor,
            dual_path_defect=record.dual_path_defect,
            measured_constant=record.measured_constant,
        )

        if not math.isfinite(value):
            raise NonContractionError(
                f"non-finite distance at iteration {iteration}", distances=log.distances
            )
        if value < config.tolerance:
            log.converged = True
            break
        growths = growths + 1 if previous_distance is not None and value > previous_distance else 0
        if growths >= config.growth_limit:
            logger.error("picard_diverging", iteration=iteration, distances=log.distances)
            raise NonContractionError(
                f"distance grew for {growths} consecutive iterations", distances=log.distances
            )
        previous_distance = value

    if not log.converged:
        logger.warning(
            "picard_iteration_cap", iterations=log.iterations, residual=log.residual
        )
    return current, log


__all__ = ["IterationLog", "IterationRecord", "picard_solve", "prepare_initial_data"]
