"""Dealiased pseudo-spectral products of form fields.

Inputs are truncated to the dealiasing box, multiplied pointwise on the
grid and the result is truncated again. With the default fraction 2/3 a
quadratic product of truncated fields is alias-free on the retained modes.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from mhdforms.exceptions import GradeError, GridMismatchError
from mhdforms.exterior.blades import blades_of_grade
from mhdforms.exterior.tables import contraction_table, wedge_table
from mhdforms.spectral.field import SpectralFormField, transform_forward
from mhdforms.spectral.grid import TorusGrid

DEFAULT_DEALIAS_FRACTION = 2.0 / 3.0


@lru_cache(maxsize=32)
def dealias_mask(grid: TorusGrid, fraction: float = DEFAULT_DEALIAS_FRACTION) -> np.ndarray:
    """Boolean mask keeping modes with |m_i| < fraction·N/2 on every axis."""
    if not 0 < fraction <= 1:
        raise GridMismatchError(
            "dealiasing fraction must lie in (0, 1]", expected="(0, 1]", actual=fraction
        )
    cutoff = fraction * grid.points / 2
    mask = np.ones(grid.spectral_shape, dtype=bool)
    for m in grid.mode_numbers:
        mask = mask & (np.abs(m) < cutoff)
    mask.setflags(write=False)
    return mask


def dealias(w: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION) -> SpectralFormField:
    """Zero every mode outside the dealiasing box."""
    return w.with_coefficients(np.where(dealias_mask(w.grid, fraction), w.coefficients, 0))


def _physical(w: SpectralFormField, fraction: float) -> np.ndarray:
    return dealias(w, fraction).to_physical()


def _finish(grid: TorusGrid, grade: int, values: np.ndarray, fraction: float) -> SpectralFormField:
    return dealias(SpectralFormField(grid, grade, transform_forward(grid, values)), fraction)


def wedge_fields(
    a: SpectralFormField, b: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """Pointwise a ∧ b, dealiased."""
    a.grid.check_same(b.grid)
    n = a.dimension
    grade = a.grade + b.grade
    if grade > n:
        raise GradeError("wedge product exceeds the top grade", expected=f"<= {n}", actual=grade)
    pa, pb = _physical(a, fraction), _physical(b, fraction)
    out = np.zeros((len(blades_of_grade(n, grade)),) + a.grid.shape)
    for entry in wedge_table(n, a.grade, b.grade):
        out[entry.target] += entry.sign * pa[entry.left] * pb[entry.right]
    return _finish(a.grid, grade, out, fraction)


def contract_fields(
    x: SpectralFormField, w: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """Pointwise x ⌟ w by a 1-form field x, dealiased."""
    x.grid.check_same(w.grid)
    if x.grade != 1:
        raise GradeError("contraction needs a 1-form field", expected=1, actual=x.grade)
    if w.grade == 0:
        raise GradeError("contraction of a 0-form", expected="> 0", actual=0)
    return _finish(
        x.grid,
        w.grade - 1,
        contract_arrays(x.dimension, w.grade, _physical(x, fraction), _physical(w, fraction)),
        fraction,
    )


def contract_arrays(dimension: int, grade: int, x: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Pointwise contraction of physical component arrays."""
    out = np.zeros((len(blades_of_grade(dimension, grade - 1)),) + w.shape[1:])
    for entry in contraction_table(dimension, grade):
        out[entry.target] += entry.sign * x[entry.axis] * w[entry.source]
    return out


__all__ = [
    "DEFAULT_DEALIAS_FRACTION",
    "contract_arrays",
    "contract_fields",
    "dealias",
    "dealias_mask",
    "wedge_fields",
]
