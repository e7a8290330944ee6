"""Pseudo-spectral nonlinear terms of the MHD system in form language.

    convection   (u·∇)u         Σ_i u_i ∂_i u_j
    lorentz      δb ⌟ b
    induction    d(u ⌟ b)

Every factor is truncated to the dealiasing box before the pointwise
product and the product is truncated again. The induction term has a
second evaluation path through the Leibniz identity

    d(u⌟b) = ℚ(δu∧b - u∧δb - u⌟db + (∇u + ∇uᵀ)·(b - bᵀ))

which holds because d(u⌟b) is exact and ℚ removes δ(u∧b).
"""

from __future__ import annotations

import numpy as np

from mhdforms.exceptions import GradeError, NumericalConsistencyError
from mhdforms.exterior.blades import blades_of_grade
from mhdforms.exterior.tables import wedge_table
from mhdforms.observability import get_logger
from mhdforms.spectral.field import SpectralFormField, transform_forward
from mhdforms.spectral.operators import d_spec, delta_spec, exact_project, gradient_components
from mhdforms.spectral.products import (
    DEFAULT_DEALIAS_FRACTION,
    contract_arrays,
    contract_fields,
    dealias,
)

logger = get_logger(__name__)


def _check_grade(w: SpectralFormField, grade: int, name: str) -> None:
    if w.grade != grade:
        raise GradeError(f"{name} must be a {grade}-form", expected=grade, actual=w.grade)


def convection_product(u: np.ndarray, gradient: np.ndarray) -> np.ndarray:
    """Σ_i u_i ∂_i u_j on physical arrays; ``gradient[i, j]`` is ∂_i u_j."""
    return np.einsum("i...,ij...->j...", u, gradient)


def convection(
    u1: SpectralFormField, u2: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """(u1·∇)u2, dealiased."""
    _check_grade(u1, 1, "u1")
    _check_grade(u2, 1, "u2")
    u1.grid.check_same(u2.grid)
    carrier, carried = dealias(u1, fraction), dealias(u2, fraction)
    product = convection_product(carrier.to_physical(), gradient_components(carried))
    return dealias(SpectralFormField(u1.grid, 1, transform_forward(u1.grid, product)), fraction)


def nonlin_convection(
    u: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """(u·∇)u, dealiased."""
    return convection(u, u, fraction)


def lorentz(
    b1: SpectralFormField, b2: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """δb1 ⌟ b2, dealiased."""
    _check_grade(b1, 2, "b1")
    _check_grade(b2, 2, "b2")
    return contract_fields(delta_spec(dealias(b1, fraction)), b2, fraction)


def nonlin_lorentz(b: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION) -> SpectralFormField:
    """δb ⌟ b, dealiased."""
    return lorentz(b, b, fraction)


def induction_product(
    u: SpectralFormField, b: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """u ⌟ b, dealiased."""
    _check_grade(u, 1, "u")
    _check_grade(b, 2, "b")
    return contract_fields(u, b, fraction)


def nonlin_induction(
    u: SpectralFormField, b: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """d(u ⌟ b), dealiased."""
    return d_spec(induction_product(u, b, fraction))


def _wedge_arrays(dimension: int, la: int, lb: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((len(blades_of_grade(dimension, la + lb)),) + a.shape[1:])
    for entry in wedge_table(dimension, la, lb):
        out[entry.target] += entry.sign * a[entry.left] * b[entry.right]
    return out


def strain_array(gradient: np.ndarray, b: np.ndarray, dimension: int) -> np.ndarray:
    """(∇u + ∇uᵀ)·(b - bᵀ) as 2-form components on physical arrays."""
    n = dimension
    symmetric = gradient + np.swapaxes(gradient, 0, 1)
    ordered = np.zeros((n, n) + b.shape[1:])
    blades = blades_of_grade(n, 2)
    for position, blade in enumerate(blades):
        j, k = (axis - 1 for axis in blade.indices)
        ordered[j, k] = b[position]
        ordered[k, j] = -b[position]
    product = np.einsum("ij...,jk...->ik...", symmetric, ordered)
    out = np.empty((len(blades),) + b.shape[1:])
    for position, blade in enumerate(blades):
        j, k = (axis - 1 for axis in blade.indices)
        out[position] = product[j, k] - product[k, j]
    return out


def induction_via_identity(
    u: SpectralFormField, b: SpectralFormField, fraction: float = DEFAULT_DEALIAS_FRACTION
) -> SpectralFormField:
    """ℚ of the right-hand side of the Leibniz identity for d(u⌟b)."""
    _check_grade(u, 1, "u")
    _check_grade(b, 2, "b")
    grid, n = u.grid, u.dimension
    u_t, b_t = dealias(u, fraction), dealias(b, fraction)
    pu, pb = u_t.to_physical(), b_t.to_physical()
    div_u = delta_spec(u_t).to_physical()
    delta_b = delta_spec(b_t).to_physical()
    total = _wedge_arrays(n, 0, 2, div_u, pb) - _wedge_arrays(n, 1, 1, pu, delta_b)
    if n >= 3:
        total = total - contract_arrays(n, 3, pu, d_spec(b_t).to_physical())
    total = total + strain_array(gradient_components(u_t), pb, n)
    rhs = dealias(SpectralFormField(grid, 2, transform_forward(grid, total)), fraction)
    return exact_project(rhs)


def induction_dual_path(
    u: SpectralFormField,
    b: SpectralFormField,
    fraction: float = DEFAULT_DEALIAS_FRACTION,
    tolerance: float | None = None,
) -> tuple[SpectralFormField, float]:
    """Induction term and the relative defect between its two evaluations.

    Raises:
        NumericalConsistencyError: if ``tolerance`` is given and exceeded
    """
    primary = nonlin_induction(u, b, fraction)
    check = induction_via_identity(u, b, fraction)
    scale = max(primary.max_abs_coefficient(), check.max_abs_coefficient())
    defect = (primary - check).max_abs_coefficient() / scale if scale > 0 else 0.0
    if tolerance is not None and defect > tolerance:
        logger.error("induction_paths_disagree", defect=defect, tolerance=tolerance)
        raise NumericalConsistencyError(
            "direct and identity evaluations of d(u⌟b) disagree",
            quantity="induction",
            defect=defect,
            tolerance=tolerance,
        )
    return primary, defect


__all__ = [
    "convection",
    "convection_product",
    "induction_dual_path",
    "induction_product",
    "induction_via_identity",
    "lorentz",
    "nonlin_convection",
    "nonlin_induction",
    "nonlin_lorentz",
    "strain_array",
]
