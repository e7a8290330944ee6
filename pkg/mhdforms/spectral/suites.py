"""Randomised floating-point identity suites for the torus calculus.

Defects are relative: each one is divided by the natural scale of the
quantity it measures, so the tolerances hold independently of the field
amplitude and of the torus period.
"""

from __future__ import annotations

import numpy as np

from mhdforms.symbolic.suites import IdentityReport, run_suite
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.grid import TorusGrid
from mhdforms.spectral.operators import (
    d_spec,
    delta_spec,
    exact_project,
    inner,
    leray_project,
)
from mhdforms.spectral.probes import random_field
from mhdforms.spectral.products import wedge_fields

COMPLEX_TOLERANCE = 1e-12
IDEMPOTENCE_TOLERANCE = 1e-12
ORTHOGONALITY_TOLERANCE = 1e-10
RANGE_TOLERANCE = 1e-10


def _kmax(grid: TorusGrid) -> float:
    return float(max(np.max(np.abs(k)) for k in grid.wavenumbers))


def _ratio(defect: float, scale: float) -> float:
    return defect / scale if scale > 0 else defect


def check_spectral_complex(dimension: int, points: int, trials: int, seed: int = 0) -> IdentityReport:
    """d∘d = 0, δ∘δ = 0 and ⟨da, b⟩ = ⟨a, δb⟩ on random fields of every grade."""
    grid = TorusGrid(dimension, points)
    counter = iter(range(trials))
    k2 = _kmax(grid) ** 2

    def trial(rng: np.random.Generator) -> tuple[bool, int, str, float]:
        grade = next(counter) % (dimension + 1)
        w = random_field(grid, grade, rng)
        scale = w.max_abs_coefficient()
        defect = adjoint = 0.0
        if grade + 2 <= dimension:
            defect = max(defect, _ratio(d_spec(d_spec(w)).max_abs_coefficient(), k2 * scale))
        if grade >= 2:
            defect = max(defect, _ratio(delta_spec(delta_spec(w)).max_abs_coefficient(), k2 * scale))
        if grade < dimension:
            a = w
            b = random_field(grid, grade + 1, rng)
            left, right = inner(d_spec(a), b), inner(a, delta_spec(b))
            size = max(abs(left), abs(right), np.sqrt(abs(inner(a, a) * inner(b, b))) * _kmax(grid))
            adjoint = _ratio(abs(left - right), size)
        ok = defect <= COMPLEX_TOLERANCE and adjoint <= ORTHOGONALITY_TOLERANCE
        rendered = f"grade {grade}: complex defect {defect:.3g}, adjointness defect {adjoint:.3g}"
        return ok, 0, rendered, max(defect, adjoint)

    return run_suite("spectral_complex", dimension, 0, trials, seed, trial)


def check_projections(dimension: int, points: int, trials: int, seed: int = 0) -> IdentityReport:
    """ℙ and ℚ idempotent, complements orthogonal, δℙu = 0 and dℚb = 0."""
    grid = TorusGrid(dimension, points)
    kmax = _kmax(grid)

    def trial(rng: np.random.Generator) -> tuple[bool, int, str, float]:
        u = random_field(grid, 1, rng)
        b = random_field(grid, 2, rng)
        pu, qb = leray_project(u), exact_project(b)
        idempotence = max(
            _ratio((leray_project(pu) - pu).max_abs_coefficient(), u.max_abs_coefficient()),
            _ratio((exact_project(qb) - qb).max_abs_coefficient(), b.max_abs_coefficient()),
        )
        orthogonality = max(
            _ratio(abs(inner(u - pu, pu)), inner(u, u)),
            _ratio(abs(inner(b - qb, qb)), inner(b, b)),
        )
        membership = _ratio(delta_spec(pu).max_abs_coefficient(), kmax * u.max_abs_coefficient())
        if dimension >= 3:
            membership = max(
                membership, _ratio(d_spec(qb).max_abs_coefficient(), kmax * b.max_abs_coefficient())
            )
        ok = (
            idempotence <= IDEMPOTENCE_TOLERANCE
            and orthogonality <= ORTHOGONALITY_TOLERANCE
            and membership <= ORTHOGONALITY_TOLERANCE
        )
        defect = max(idempotence, orthogonality, membership)
        return ok, 0, f"idempotence {idempotence:.3g}, orthogonality {orthogonality:.3g}", defect

    return run_suite("projections", dimension, 0, trials, seed, trial)


def check_range_exclusion(dimension: int, points: int, trials: int, seed: int = 0) -> IdentityReport:
    """ℚ δ(u∧b) = 0 on random pairs."""
    grid = TorusGrid(dimension, points)

    def trial(rng: np.random.Generator) -> tuple[bool, int, str, float]:
        u = random_field(grid, 1, rng)
        b = random_field(grid, 2, rng)
        coexact = delta_spec(wedge_fields(u, b, 1.0))
        defect = _ratio(exact_project(coexact).max_abs_coefficient(), coexact.max_abs_coefficient())
        return defect <= RANGE_TOLERANCE, 0, f"defect {defect:.3g}", defect

    return run_suite("range_exclusion", dimension, 0, trials, seed, trial)


def relative_difference(a: SpectralFormField, b: SpectralFormField) -> float:
    scale = max(a.max_abs_coefficient(), b.max_abs_coefficient())
    return _ratio((a - b).max_abs_coefficient(), scale)


__all__ = [
    "check_projections",
    "check_range_exclusion",
    "check_spectral_complex",
    "relative_difference",
]
