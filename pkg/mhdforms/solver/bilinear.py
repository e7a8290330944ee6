"""The three bilinear Duhamel operators of the mild formulation.

    B1(u1, u2) = -∫ S(t-s) ℙ (u1·∇)u2 ds
    B2(b1, b2) = +∫ S(t-s) ℙ (δb1 ⌟ b2) ds
    B3(u, b)   = +∫ M(t-s) ℚ d(u ⌟ b) ds

Each result carries its measured norm next to the product of the input
norms; the ratio is an empirical boundedness constant on that input pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from pydantic import BaseModel, Field

from mhdforms.exceptions import MeshError
from mhdforms.observability import get_logger
from mhdforms.solver.config import SolverConfig
from mhdforms.solver.duhamel import DuhamelAccumulator
from mhdforms.solver.kernels import DuhamelWeights
from mhdforms.solver.mesh import TimeMesh
from mhdforms.solver.nonlinear import convection, lorentz, nonlin_induction
from mhdforms.solver.norms import NormAccumulator
from mhdforms.solver.trajectory import MildTrajectory
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.operators import Semigroup, exact_project, leray_project
from mhdforms.spectral.probes import gaussian_bump_probe, probe_width_for_horizon
from mhdforms.spectral.products import DEFAULT_DEALIAS_FRACTION, dealias

logger = get_logger(__name__)

# Probe width = factor·√T; keeps the probe well inside the 2π period for T ≤ 1/4.
DEFAULT_WIDTH_FACTOR = 1.0
# Larger horizons make the probe feel the periodic images.
MAX_MEASURE_HORIZON = 0.25

Source = Callable[[SpectralFormField, SpectralFormField], SpectralFormField]


@dataclass
class BilinearResult:
    """Output trajectory of one bilinear operator with its measured ratio."""

    values: list[SpectralFormField]
    norm: float
    input_norm: float

    @property
    def ratio(self) -> float:
        return self.norm / self.input_norm if self.input_norm > 0 else 0.0

    def at(self, mesh: TimeMesh, t: float) -> SpectralFormField:
        return self.values[mesh.index_of(t)]


def _apply(
    semigroup: Semigroup,
    source: Source,
    sign: float,
    first: Sequence[SpectralFormField],
    second: Sequence[SpectralFormField],
    mesh: TimeMesh,
    singular_weight: float,
    output_grade: int,
) -> list[SpectralFormField]:
    if len(first) != len(mesh) or len(second) != len(mesh):
        raise MeshError("inputs must be given at every mesh node", nodes=mesh.nodes)
    grid = first[0].grid
    accumulator = DuhamelAccumulator(
        semigroup,
        grid,
        output_grade,
        mesh,
        weights=DuhamelWeights(grid.laplacian_symbol, mesh, singular_weight),
    )
    values = [SpectralFormField.zeros(grid, output_grade)]
    for j in range(1, len(mesh)):
        values.append(sign * accumulator.advance(source(first[j], second[j])))
    return values


def _velocity_norm(mesh: TimeMesh, values: Sequence[SpectralFormField]) -> float:
    accumulator = NormAccumulator()
    for t, u in zip(mesh.times, values):
        accumulator.update(float(t), u, None)
    return accumulator.result().velocity_norm


def _magnetic_norm(mesh: TimeMesh, values: Sequence[SpectralFormField]) -> float:
    accumulator = NormAccumulator()
    for t, b in zip(mesh.times, values):
        accumulator.update(float(t), None, b)
    return accumulator.result().magnetic_norm


def bilinear_b1(
    u1: Sequence[SpectralFormField],
    u2: Sequence[SpectralFormField],
    mesh: TimeMesh,
    fraction: float = DEFAULT_DEALIAS_FRACTION,
    singular_weight: float = 0.0,
) -> BilinearResult:
    """B1(u1, u2): velocity × velocity → velocity."""
    values = _apply(
        Semigroup.STOKES,
        lambda a, b: convection(a, b, fraction),
        -1.0,
        u1,
        u2,
        mesh,
        singular_weight,
        1,
    )
    return BilinearResult(
        values, _velocity_norm(mesh, values), _velocity_norm(mesh, u1) * _velocity_norm(mesh, u2)
    )


def bilinear_b2(
    b1: Sequence[SpectralFormField],
    b2: Sequence[SpectralFormField],
    mesh: TimeMesh,
    fraction: float = DEFAULT_DEALIAS_FRACTION,
    singular_weight: float = 0.0,
) -> BilinearResult:
    """B2(b1, b2): magnetic × magnetic → velocity."""
    values = _apply(
        Semigroup.STOKES,
        lambda a, b: lorentz(a, b, fraction),
        1.0,
        b1,
        b2,
        mesh,
        singular_weight,
        1,
    )
    return BilinearResult(
        values, _velocity_norm(mesh, values), _magnetic_norm(mesh, b1) * _magnetic_norm(mesh, b2)
    )


def bilinear_b3(
    u: Sequence[SpectralFormField],
    b: Sequence[SpectralFormField],
    mesh: TimeMesh,
    fraction: float = DEFAULT_DEALIAS_FRACTION,
    singular_weight: float = 0.0,
) -> BilinearResult:
    """B3(u, b): velocity × magnetic → magnetic."""
    values = _apply(
        Semigroup.MAXWELL,
        lambda x, w: nonlin_induction(x, w, fraction),
        1.0,
        u,
        b,
        mesh,
        singular_weight,
        2,
    )
    return BilinearResult(
        values, _magnetic_norm(mesh, values), _velocity_norm(mesh, u) * _magnetic_norm(mesh, b)
    )


class BilinearConstant(BaseModel):
    """Measured boundedness ratios of B1, B2, B3 on one scale-matched probe."""

    horizon: float = Field(..., gt=0.0)
    width: float = Field(..., gt=0.0, description="Probe width, proportional to √T")
    b1_ratio: float = Field(..., ge=0.0)
    b2_ratio: float = Field(..., ge=0.0)
    b3_ratio: float = Field(..., ge=0.0)

    @property
    def constant(self) -> float:
        return max(self.b1_ratio, self.b2_ratio, self.b3_ratio)


def measure_bilinear_constant(
    config: SolverConfig, horizon: float | None = None, width_factor: float = DEFAULT_WIDTH_FACTOR
) -> BilinearConstant:
    """Measure the three bilinear ratios on heat-evolved localised probes.

    The probe width scales like √T so that runs at T, T/2, T/4 see the same
    configuration up to parabolic rescaling; the ratios are then expected
    to agree up to discretisation effects. This only holds while the probe
    stays well inside the period, hence the small default width factor.
    """
    horizon = config.horizon if horizon is None else horizon
    config = config.model_copy(update={"horizon": horizon})
    grid, mesh = config.grid, config.mesh
    width = probe_width_for_horizon(horizon, width_factor)
    fraction = config.dealias_fraction
    u0 = dealias(leray_project(gaussian_bump_probe(grid, 1, width)), fraction)
    b0 = dealias(exact_project(gaussian_bump_probe(grid, 2, width)), fraction)
    linear = MildTrajectory.linear(u0, b0, mesh)
    weight = config.singular_weight
    result = BilinearConstant(
        horizon=horizon,
        width=width,
        b1_ratio=bilinear_b1(linear.velocity, linear.velocity, mesh, fraction, weight).ratio,
        b2_ratio=bilinear_b2(linear.magnetic, linear.magnetic, mesh, fraction, weight).ratio,
        b3_ratio=bilinear_b3(linear.velocity, linear.magnetic, mesh, fraction, weight).ratio,
    )
    logger.info(
        "bilinear_constant_measured",
        horizon=horizon,
        width=width,
        b1=result.b1_ratio,
        b2=result.b2_ratio,
        b3=result.b3_ratio,
    )
    return result



def measure_bilinear_constants(
    config: SolverConfig, count: int = 3, width_factor: float = DEFAULT_WIDTH_FACTOR
) -> list[BilinearConstant]:
    """C_T at T₀, T₀/2, ..., T₀/2^(count-1) with T₀ = min(T, MAX_MEASURE_HORIZON)."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    start = min(config.horizon, MAX_MEASURE_HORIZON)
    measured = [measure_bilinear_constant(config, start / 2**k, width_factor) for k in range(count)]
    logger.info("bilinear_constant_spread", horizon=start, spread=constant_spread(measured))
    return measured


def constant_spread(measured: Sequence[BilinearConstant]) -> float:
    """(max - min) / max of the measured constants; 0 for an empty or all-zero list."""
    values = [m.constant for m in measured]
    if not values or max(values) == 0.0:
        return 0.0
    return (max(values) - min(values)) / max(values)

__all__ = [
    "BilinearConstant",
    "BilinearResult",
    "bilinear_b1",
    "bilinear_b2",
    "bilinear_b3",
    "constant_spread",
    "measure_bilinear_constant",
    "measure_bilinear_constants",
]
