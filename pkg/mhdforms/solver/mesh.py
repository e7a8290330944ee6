"""Graded time meshes t_j = T(j/M)^γ."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from mhdforms.exceptions import MeshError

NODE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class TimeMesh:
    """Strictly increasing time nodes starting at 0.

    Attributes:
        times: read-only array t_0 = 0 < t_1 < ... < t_M = T
    """

    times: np.ndarray

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=float)
        if times.ndim != 1 or times.size < 2:
            raise MeshError("a mesh needs at least two nodes", nodes=int(times.size))
        if times[0] != 0.0:
            raise MeshError("a mesh must start at t = 0", time=float(times[0]), nodes=times.size)
        if np.any(np.diff(times) <= 0) or not np.all(np.isfinite(times)):
            raise MeshError("mesh nodes must be strictly increasing", nodes=times.size)
        times.setflags(write=False)
        object.__setattr__(self, "times", times)

    @classmethod
    def from_times(cls, times: Iterable[float]) -> "TimeMesh":
        """Mesh on the sorted union of ``times`` and 0."""
        return cls(np.unique(np.concatenate([[0.0], np.asarray(list(times), dtype=float)])))

    @property
    def horizon(self) -> float:
        return float(self.times[-1])

    @property
    def nodes(self) -> int:
        """Number of intervals M."""
        return self.times.size - 1

    @property
    def steps(self) -> np.ndarray:
        return np.diff(self.times)

    def __len__(self) -> int:
        return self.times.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TimeMesh):
            return NotImplemented
        return self.times.shape == other.times.shape and bool(np.all(self.times == other.times))

    def __hash__(self) -> int:
        return hash(self.times.tobytes())

    def index_of(self, t: float) -> int:
        """Node index of ``t``.

        Raises:
            MeshError: if ``t`` is not a node (relative tolerance 1e-12)
        """
        j = int(np.argmin(np.abs(self.times - t)))
        if abs(self.times[j] - t) > NODE_TOLERANCE * max(1.0, abs(t)):
            raise MeshError(f"t = {t} is not a mesh node", time=t, nodes=self.nodes)
        return j

    def restrict(self, horizon: float) -> "TimeMesh":
        """Nodes up to and including ``horizon``, which must be a node."""
        return TimeMesh(self.times[: self.index_of(horizon) + 1])


def graded_mesh(horizon: float, nodes: int, grading: float = 2.0) -> TimeMesh:
    """t_j = T(j/M)^γ for j = 0..M.

    Example:
        >>> graded_mesh(1.0, 4, 2.0).times
        array([0.    , 0.0625, 0.25  , 0.5625, 1.    ])
    """
    if not horizon > 0 or not np.isfinite(horizon):
        raise MeshError("horizon must be positive", time=horizon, nodes=nodes)
    if nodes < 1:
        raise MeshError("a mesh needs at least one interval", time=horizon, nodes=nodes)
    if grading < 1:
        raise MeshError(f"grading exponent must be >= 1, got {grading}", time=horizon, nodes=nodes)
    j = np.arange(nodes + 1, dtype=float)
    times = horizon * (j / nodes) ** grading
    times[-1] = horizon
    return TimeMesh(times)


__all__ = ["TimeMesh", "graded_mesh"]
