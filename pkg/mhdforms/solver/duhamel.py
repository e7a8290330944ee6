"""Duhamel convolutions ∫₀ᵗ S(t-s) P G(s) ds on a graded mesh."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from mhdforms.exceptions import GradeError, MeshError
from mhdforms.solver.kernels import DuhamelWeights
from mhdforms.solver.mesh import TimeMesh
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.grid import TorusGrid
from mhdforms.spectral.operators import Semigroup


class DuhamelAccumulator:
    """Streaming product-integration of one Duhamel convolution.

    Feed the source at t_1, t_2, ... in order; after feeding the source at
    t_m, :attr:`value` is the convolution at t_m. The projection of the
    semigroup is applied to every source value, which is exact because the
    projections commute with the heat multiplier.

    Example:
        >>> acc = DuhamelAccumulator(Semigroup.STOKES, grid, 1, mesh)
        >>> for m in range(1, mesh.nodes + 1):
        ...     acc.advance(source_at(mesh.times[m]))
        >>> acc.value  # convolution at T
    """

    def __init__(
        self,
        semigroup: Semigroup | str,
        grid: TorusGrid,
        grade: int,
        mesh: TimeMesh,
        weights: DuhamelWeights | None = None,
        singular_weight: float = 0.0,
    ) -> None:
        self.semigroup = Semigroup(semigroup)
        expected = self.semigroup.grade
        if expected is not None and expected != grade:
            raise GradeError(
                f"{self.semigroup.value} semigroup acts on {expected}-forms",
                expected=expected,
                actual=grade,
            )
        self.grid = grid
        self.grade = grade
        self.mesh = mesh
        self.weights = weights or DuhamelWeights(grid.laplacian_symbol, mesh, singular_weight)
        self._state = SpectralFormField.zeros(grid, grade).coefficients
        self._index = 0

    @property
    def index(self) -> int:
        """Mesh index of the current value."""
        return self._index

    @property
    def value(self) -> SpectralFormField:
        return SpectralFormField(self.grid, self.grade, self._state)

    def advance(self, source: SpectralFormField) -> SpectralFormField:
        """Take the source at the next node and return the convolution there."""
        if source.grade != self.grade:
            raise GradeError("source grade differs", expected=self.grade, actual=source.grade)
        self.grid.check_same(source.grid)
        m = self._index + 1
        if m > self.mesh.nodes:
            raise MeshError("accumulator already reached the horizon", nodes=self.mesh.nodes)
        decay, weight = self.weights.factors(m)
        projected = self.semigroup.project(source).coefficients
        self._state = decay * self._state + weight * projected
        self._index = m
        return self.value


def duhamel(
    semigroup: Semigroup | str,
    source: Sequence[SpectralFormField],
    mesh: TimeMesh,
    t: float,
    singular_weight: float = 0.0,
) -> SpectralFormField:
    """∫₀ᵗ S(t-s) P G(s) ds for a source given at every mesh node.

    ``source[j]`` is G(t_j); the value at t_0 is never used because the
    rule holds G at the right end of each interval.

    Raises:
        MeshError: if ``t`` is not a node or the source stops before it
    """
    j = mesh.index_of(t)
    if len(source) < j + 1:
        raise MeshError(
            f"source has {len(source)} nodes, needs {j + 1}", time=t, nodes=mesh.nodes
        )
    if j == 0:
        return SpectralFormField.zeros(source[0].grid, source[0].grade)
    accumulator = DuhamelAccumulator(
        semigroup, source[0].grid, source[0].grade, mesh, singular_weight=singular_weight
    )
    for m in range(1, j + 1):
        accumulator.advance(source[m])
    return accumulator.value


def duhamel_multiplier(rate: float | np.ndarray, t: float) -> np.ndarray:
    """∫₀ᵗ e^{-λ(t-s)} ds = (1 - e^{-λt})/λ, t at λ = 0."""
    rate = np.asarray(rate, dtype=float)
    safe = np.where(rate > 0, rate, 1.0)
    return np.where(rate > 0, -np.expm1(-rate * t) / safe, t)


__all__ = ["DuhamelAccumulator", "duhamel", "duhamel_multiplier"]
