"""Critical norms of velocity/magnetic trajectories.

On the mesh the norms are sup over nodes t_j > 0 of

    t^{1/4} ‖u‖_{2n},  t^{1/2} ‖∇u‖_n      (velocity space)
    t^{1/4} ‖b‖_{2n},  t^{1/2} ‖δb‖_n      (magnetic space)

and their sum is the norm of the product space. ‖∇u‖_n uses the pointwise
Frobenius norm of the full Jacobian. The continuity sups ‖u‖_n and ‖b‖_n
run over all nodes including t = 0.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np
from pydantic import BaseModel, Field

from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.norms import lp_norm, lp_norm_of_magnitude, pointwise_magnitude
from mhdforms.spectral.operators import delta_spec, gradient_components

TERM_NAMES = ("velocity", "velocity_gradient", "magnetic", "magnetic_coderivative")


class CriticalNorms(BaseModel):
    """Weighted sups of one trajectory (or of a difference of two)."""

    velocity: float = Field(0.0, ge=0.0, description="sup t^{1/4}‖u‖_{2n}")
    velocity_gradient: float = Field(0.0, ge=0.0, description="sup t^{1/2}‖∇u‖_n")
    magnetic: float = Field(0.0, ge=0.0, description="sup t^{1/4}‖b‖_{2n}")
    magnetic_coderivative: float = Field(0.0, ge=0.0, description="sup t^{1/2}‖δb‖_n")
    velocity_continuity: float = Field(0.0, ge=0.0, description="sup ‖u‖_n over all nodes")
    magnetic_continuity: float = Field(0.0, ge=0.0, description="sup ‖b‖_n over all nodes")

    @property
    def velocity_norm(self) -> float:
        return self.velocity + self.velocity_gradient

    @property
    def magnetic_norm(self) -> float:
        return self.magnetic + self.magnetic_coderivative

    @property
    def total(self) -> float:
        return self.velocity_norm + self.magnetic_norm

    def terms(self) -> tuple[float, float, float, float]:
        return (self.velocity, self.velocity_gradient, self.magnetic, self.magnetic_coderivative)


def velocity_terms(t: float, u: SpectralFormField) -> tuple[float, float]:
    n = u.dimension
    gradient = lp_norm_of_magnitude(
        pointwise_magnitude(gradient_components(u), component_axes=2), u.grid, n
    )
    return t**0.25 * lp_norm(u, 2 * n), t**0.5 * gradient


def magnetic_terms(t: float, b: SpectralFormField) -> tuple[float, float]:
    n = b.dimension
    return t**0.25 * lp_norm(b, 2 * n), t**0.5 * lp_norm(delta_spec(b), n)


def node_terms(t: float, u: SpectralFormField, b: SpectralFormField) -> tuple[float, ...]:
    """The four weighted quantities at one node."""
    return velocity_terms(t, u) + magnetic_terms(t, b)


class NormAccumulator:
    """Running sups for streaming evaluation node by node.

    Either field may be None to skip that half, which leaves its entries 0.
    """

    def __init__(self) -> None:
        self._sups = [0.0] * 4
        self._continuity = [0.0, 0.0]

    def update(
        self, t: float, u: SpectralFormField | None, b: SpectralFormField | None
    ) -> tuple[float, ...]:
        terms = [0.0] * 4
        if u is not None:
            self._continuity[0] = max(self._continuity[0], lp_norm(u, u.dimension))
            if t > 0:
                terms[0:2] = velocity_terms(t, u)
        if b is not None:
            self._continuity[1] = max(self._continuity[1], lp_norm(b, b.dimension))
            if t > 0:
                terms[2:4] = magnetic_terms(t, b)
        for i, value in enumerate(terms):
            # nan must survive the max
            self._sups[i] = value if math.isnan(value) else max(self._sups[i], value)
        return tuple(terms)

    @property
    def finite(self) -> bool:
        return all(math.isfinite(v) for v in self._sups + self._continuity)

    @property
    def total(self) -> float:
        return float(sum(self._sups))

    def result(self) -> CriticalNorms:
        if not self.finite:
            return CriticalNorms(**dict(zip(TERM_NAMES, [math.inf] * 4)))
        return CriticalNorms(
            **dict(zip(TERM_NAMES, self._sups)),
            velocity_continuity=self._continuity[0],
            magnetic_continuity=self._continuity[1],
        )


def critical_norms(
    times: Sequence[float] | np.ndarray,
    velocity: Sequence[SpectralFormField],
    magnetic: Sequence[SpectralFormField],
) -> CriticalNorms:
    """Critical norms of a trajectory given node by node."""
    accumulator = NormAccumulator()
    for t, u, b in zip(times, velocity, magnetic, strict=True):
        accumulator.update(float(t), u, b)
    return accumulator.result()


def trajectory_distance(
    times: Sequence[float] | np.ndarray,
    first: Iterable[tuple[SpectralFormField, SpectralFormField]],
    second: Iterable[tuple[SpectralFormField, SpectralFormField]],
) -> float:
    """Product-space norm of the difference of two trajectories."""
    accumulator = NormAccumulator()
    for t, (u1, b1), (u2, b2) in zip(times, first, second, strict=True):
        accumulator.update(float(t), u1 - u2, b1 - b2)
    return accumulator.total


__all__ = [
    "CriticalNorms",
    "NormAccumulator",
    "critical_norms",
    "magnetic_terms",
    "node_terms",
    "trajectory_distance",
    "velocity_terms",
]
