"""Fourier-multiplier calculus on torus form fields.

d = Σ ∂_i e_i ∧ acts as ik∧, δ = -Σ ∂_i e_i ⌟ acts as -ik⌟, and the Hodge
Laplacian -Δ = dδ + δd is multiplication by |k|². The Hodge parts of a
field are

    exact    = dδ(-Δ)⁻¹ w = k∧(k⌟ŵ)/|k|²
    coexact  = δd(-Δ)⁻¹ w = k⌟(k∧ŵ)/|k|²
    harmonic = modes with |k|² = 0

The Leray projection ℙ keeps harmonic + coexact parts of a 1-form; the
exact-range projection ℚ keeps only the exact part of a 2-form.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np

from mhdforms.exceptions import GradeError, NegativeTimeError
from mhdforms.exterior.blades import blades_of_grade
from mhdforms.exterior.tables import contraction_table, wedge_table
from mhdforms.spectral.field import SpectralFormField, transform_inverse


def vector_wedge(
    dimension: int, grade: int, vector: Sequence[np.ndarray], w: np.ndarray
) -> np.ndarray:
    """Σ_i vector_i e_i ∧ w on component-stacked arrays."""
    count = len(blades_of_grade(dimension, grade + 1))
    out = np.zeros((count,) + np.broadcast_shapes(vector[0].shape, w.shape[1:]), dtype=np.result_type(vector[0], w))
    for entry in wedge_table(dimension, 1, grade):
        out[entry.target] += entry.sign * vector[entry.left] * w[entry.right]
    return out


def vector_contract(
    dimension: int, grade: int, vector: Sequence[np.ndarray], w: np.ndarray
) -> np.ndarray:
    """Σ_i vector_i e_i ⌟ w on component-stacked arrays."""
    count = len(blades_of_grade(dimension, grade - 1))
    out = np.zeros((count,) + np.broadcast_shapes(vector[0].shape, w.shape[1:]), dtype=np.result_type(vector[0], w))
    for entry in contraction_table(dimension, grade):
        out[entry.target] += entry.sign * vector[entry.axis] * w[entry.source]
    return out


def d_spec(w: SpectralFormField) -> SpectralFormField:
    """Exterior derivative, ik ∧ per frequency.

    Raises:
        GradeError: for top-grade input
    """
    n = w.dimension
    if w.grade >= n:
        raise GradeError("d of a top-grade form", expected=f"< {n}", actual=w.grade)
    ik = [1j * k for k in w.grid.wavenumbers]
    return SpectralFormField(w.grid, w.grade + 1, vector_wedge(n, w.grade, ik, w.coefficients))


def delta_spec(w: SpectralFormField) -> SpectralFormField:
    """Coderivative, -ik ⌟ per frequency.

    Raises:
        GradeError: for 0-forms
    """
    n = w.dimension
    if w.grade == 0:
        raise GradeError("δ of a 0-form", expected="> 0", actual=0)
    minus_ik = [-1j * k for k in w.grid.wavenumbers]
    return SpectralFormField(
        w.grid, w.grade - 1, vector_contract(n, w.grade, minus_ik, w.coefficients)
    )


def hodge_laplacian(w: SpectralFormField) -> SpectralFormField:
    """-Δw = dδw + δdw composed from the two derivatives."""
    n = w.dimension
    out = SpectralFormField.zeros(w.grid, w.grade)
    if w.grade > 0:
        out = out + d_spec(delta_spec(w))
    if w.grade < n:
        out = out + delta_spec(d_spec(w))
    return out


def laplacian_multiply(w: SpectralFormField) -> SpectralFormField:
    """-Δw as the diagonal multiplier |k|²."""
    return w.with_coefficients(w.grid.laplacian_symbol * w.coefficients)


def inverse_laplacian(w: SpectralFormField) -> SpectralFormField:
    """(-Δ)⁻¹ on the non-harmonic modes, zero on harmonic ones."""
    return w.with_coefficients(w.grid.inverse_laplacian_symbol * w.coefficients)


def harmonic_part(w: SpectralFormField) -> SpectralFormField:
    mask = w.grid.laplacian_symbol == 0
    return w.with_coefficients(np.where(mask, w.coefficients, 0))


def exact_part(w: SpectralFormField) -> SpectralFormField:
    """dδ(-Δ)⁻¹ w; zero for 0-forms."""
    if w.grade == 0:
        return SpectralFormField.zeros(w.grid, 0)
    return d_spec(delta_spec(inverse_laplacian(w)))


def coexact_part(w: SpectralFormField) -> SpectralFormField:
    """δd(-Δ)⁻¹ w; zero for top-grade forms."""
    if w.grade == w.dimension:
        return SpectralFormField.zeros(w.grid, w.grade)
    return delta_spec(d_spec(inverse_laplacian(w)))


def hodge_parts(
    w: SpectralFormField,
) -> tuple[SpectralFormField, SpectralFormField, SpectralFormField]:
    """(harmonic, exact, coexact); the three parts sum to w."""
    return harmonic_part(w), exact_part(w), coexact_part(w)


def leray_project(u: SpectralFormField) -> SpectralFormField:
    """ℙ: û - k(k·û)/|k|² for k ≠ 0; harmonic modes unchanged."""
    if u.grade != 1:
        raise GradeError("Leray projection acts on 1-forms", expected=1, actual=u.grade)
    return u - exact_part(u)


def exact_project(b: SpectralFormField) -> SpectralFormField:
    """ℚ: k∧(k⌟b̂)/|k|² for k ≠ 0; harmonic modes dropped."""
    if b.grade != 2:
        raise GradeError("exact-range projection acts on 2-forms", expected=2, actual=b.grade)
    return exact_part(b)


def _check_time(t: float) -> None:
    if t < 0:
        raise NegativeTimeError(f"semigroup evaluated at negative time {t}", time=t)


def heat_semigroup(t: float, w: SpectralFormField) -> SpectralFormField:
    """e^{tΔ}: multiplication by e^{-t|k|²}."""
    _check_time(t)
    return w.with_coefficients(np.exp(-t * w.grid.laplacian_symbol) * w.coefficients)


def stokes_semigroup(t: float, u: SpectralFormField) -> SpectralFormField:
    """Leray-projected heat flow of a 1-form."""
    _check_time(t)
    return heat_semigroup(t, leray_project(u))


def maxwell_semigroup(t: float, b: SpectralFormField) -> SpectralFormField:
    """Heat flow restricted to the exact range of 2-forms."""
    _check_time(t)
    return heat_semigroup(t, exact_project(b))


class Semigroup(str, Enum):
    """The three heat-type semigroups and the projection each one carries."""

    HEAT = "heat"
    STOKES = "stokes"
    MAXWELL = "maxwell"

    def project(self, w: SpectralFormField) -> SpectralFormField:
        if self is Semigroup.STOKES:
            return leray_project(w)
        if self is Semigroup.MAXWELL:
            return exact_project(w)
        return w

    def apply(self, t: float, w: SpectralFormField) -> SpectralFormField:
        _check_time(t)
        return heat_semigroup(t, self.project(w))

    @property
    def grade(self) -> int | None:
        """Grade the semigroup acts on (None: any)."""
        return {Semigroup.STOKES: 1, Semigroup.MAXWELL: 2}.get(self)


def gradient_components(w: SpectralFormField) -> np.ndarray:
    """Physical ∂_i w_J stacked as (n, C(n, ℓ), *grid.shape)."""
    grid = w.grid
    return np.stack(
        [transform_inverse(grid, 1j * k * w.coefficients) for k in grid.wavenumbers]
    )


def jacobian(u: SpectralFormField) -> np.ndarray:
    """Physical Jacobian J[i, j] = ∂_i u_j of a 1-form."""
    if u.grade != 1:
        raise GradeError("jacobian acts on 1-forms", expected=1, actual=u.grade)
    return gradient_components(u)


def inner(a: SpectralFormField, b: SpectralFormField) -> float:
    """L² inner product ∫ Σ_J a_J b_J by the rectangle rule."""
    a.grid.check_same(b.grid)
    if a.grade != b.grade:
        raise GradeError("inner product of different grades", expected=a.grade, actual=b.grade)
    return float(np.sum(a.to_physical() * b.to_physical()) * a.grid.cell_volume)


__all__ = [
    "Semigroup",
    "coexact_part",
    "d_spec",
    "delta_spec",
    "exact_part",
    "exact_project",
    "gradient_components",
    "harmonic_part",
    "heat_semigroup",
    "hodge_laplacian",
    "hodge_parts",
    "inner",
    "inverse_laplacian",
    "jacobian",
    "laplacian_multiply",
    "leray_project",
    "maxwell_semigroup",
    "stokes_semigroup",
    "vector_contract",
    "vector_wedge",
]
