"""Lᵖ norms of form fields by rectangle-rule quadrature on the grid."""

from __future__ import annotations

import math

import numpy as np

from mhdforms.exceptions import ExponentRelationError
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.grid import TorusGrid


def _check_exponent(p: float) -> None:
    if not p >= 1:
        raise ExponentRelationError(
            f"integrability exponent must satisfy p >= 1, got {p}",
            p=p,
            q=p,
            alpha=0.0,
            dimension=0,
        )


def pointwise_magnitude(values: np.ndarray, component_axes: int = 1) -> np.ndarray:
    """Euclidean norm over the leading ``component_axes`` axes of an array."""
    axes = tuple(range(component_axes))
    return np.sqrt(np.sum(values**2, axis=axes))


def lp_norm_of_magnitude(magnitude: np.ndarray, grid: TorusGrid, p: float) -> float:
    """(Σ |f|ᵖ · cell volume)^{1/p}, or max |f| for p = ∞."""
    _check_exponent(p)
    if math.isinf(p):
        return float(np.max(magnitude)) if magnitude.size else 0.0
    peak = float(np.max(magnitude)) if magnitude.size else 0.0
    if peak == 0.0:
        return 0.0
    # scale out the peak to keep |f|^p in range for large p
    scaled = magnitude / peak
    return peak * float(np.sum(scaled**p) * grid.cell_volume) ** (1.0 / p)


def lp_norm(w: SpectralFormField, p: float) -> float:
    """‖w‖_p of the pointwise euclidean blade-coefficient norm.

    Example:
        >>> grid = TorusGrid(3, 8)
        >>> lp_norm(SpectralFormField.zeros(grid, 1), 2.0)
        0.0
    """
    return lp_norm_of_magnitude(pointwise_magnitude(w.to_physical()), w.grid, p)


def parseval_l2(w: SpectralFormField) -> float:
    """‖w‖₂ from the Fourier coefficients: sqrt(Lⁿ Σ |ĉ|²)."""
    grid = w.grid
    energy = np.sum(grid.parseval_weights * np.abs(w.coefficients) ** 2)
    return math.sqrt(float(energy) * grid.volume)


__all__ = ["lp_norm", "lp_norm_of_magnitude", "parseval_l2", "pointwise_magnitude"]
