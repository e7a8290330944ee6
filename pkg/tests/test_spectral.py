"""
Tests for torus form fields, the multiplier calculus and the numeric suites.
"""

import math

import numpy as np
import pytest

from mhdforms.exceptions import GradeError, GridMismatchError, NegativeTimeError
from mhdforms.spectral import (
    Semigroup,
    SpectralFormField,
    TorusGrid,
    coexact_part,
    contract_fields,
    d_spec,
    dealias,
    delta_spec,
    exact_part,
    exact_project,
    gaussian_bump_probe,
    harmonic_part,
    heat_semigroup,
    hodge_laplacian,
    hodge_parts,
    inner,
    jacobian,
    leray_project,
    lp_norm,
    maxwell_semigroup,
    parseval_l2,
    random_field,
    single_mode,
    stokes_semigroup,
    wedge_fields,
)
from mhdforms.spectral.operators import laplacian_multiply
from mhdforms.spectral.products import dealias_mask
from mhdforms.spectral.suites import (
    check_projections,
    check_range_exclusion,
    check_spectral_complex,
    relative_difference,
)
from mhdforms.symbolic.polyforms import PolyForm, d_sym, trig_algebra

pytestmark = pytest.mark.unit


# ----------------------------------------------------------------------------
# Grid and field
# ----------------------------------------------------------------------------


def test_grid_shapes(grid3):
    assert grid3.shape == (16, 16, 16)
    assert grid3.spectral_shape == (16, 16, 9)
    assert grid3.spacing == pytest.approx(2 * math.pi / 16)
    assert grid3.laplacian_symbol.shape == grid3.spectral_shape


@pytest.mark.parametrize("points", [6, 1, 12])
def test_grid_requires_power_of_two(points):
    with pytest.raises(GridMismatchError):
        TorusGrid(3, points)


def test_nyquist_wavenumber_is_zero():
    grid = TorusGrid(2, 8)
    k_last = grid.wavenumbers[-1].ravel()
    assert k_last[-1] == 0.0
    assert k_last[1] == pytest.approx(1.0)


def test_physical_round_trip(grid3, rng):
    values = rng.standard_normal((3,) + grid3.shape)
    field = SpectralFormField.from_physical(grid3, 1, values)
    np.testing.assert_allclose(field.to_physical(), values, atol=1e-13)


def test_field_shape_checked(grid3):
    with pytest.raises(GridMismatchError):
        SpectralFormField(grid3, 1, np.zeros((2,) + grid3.spectral_shape, dtype=complex))


def test_mismatched_grids_rejected(grid3, grid3_coarse):
    with pytest.raises(GridMismatchError):
        SpectralFormField.zeros(grid3, 1) + SpectralFormField.zeros(grid3_coarse, 1)


# ----------------------------------------------------------------------------
# Derivatives and Hodge parts
# ----------------------------------------------------------------------------


def test_d_of_single_mode_matches_analytic_derivative(grid3):
    # w = sin(2 x1) e2, dw = 2 cos(2 x1) e1∧e2
    w = single_mode(grid3, 1, 1, (2, 0, 0))
    dw = d_spec(w).to_physical()
    x1 = grid3.mesh()[0]
    np.testing.assert_allclose(dw[0], 2 * np.cos(2 * x1), atol=1e-12)
    np.testing.assert_allclose(dw[1:], 0.0, atol=1e-12)


def test_spectral_d_matches_trigonometric_forms(grid3):
    algebra = trig_algebra(3)
    c1, c2, c3 = (algebra.cos(i) for i in (1, 2, 3))
    s1, s2, s3 = (algebra.sin(i) for i in (1, 2, 3))
    w = PolyForm.from_components(algebra, 1, {(1,): c2 * s3, (2,): s1 * c3, (3,): c1 * s2})
    values = np.stack([algebra.evaluate(c, grid3.mesh()) for c in w.components()])
    expected = np.stack([algebra.evaluate(c, grid3.mesh()) for c in d_sym(w).components()])
    field = SpectralFormField.from_physical(grid3, 1, values)
    np.testing.assert_allclose(d_spec(field).to_physical(), expected, atol=1e-11)


def test_derivative_grade_limits(grid3):
    with pytest.raises(GradeError):
        d_spec(SpectralFormField.zeros(grid3, 3))
    with pytest.raises(GradeError):
        delta_spec(SpectralFormField.zeros(grid3, 0))


def test_hodge_laplacian_is_multiplier(grid3, magnetic):
    expected = laplacian_multiply(magnetic)
    assert relative_difference(hodge_laplacian(magnetic), expected) < 1e-12


@pytest.mark.parametrize("grade", [0, 1, 2, 3])
def test_hodge_parts_sum_to_field(grid3, rng, grade):
    w = random_field(grid3, grade, rng)
    coefficients = w.coefficients.copy()
    coefficients[(slice(None), 0, 0, 0)] += 0.1  # harmonic content
    w = w.with_coefficients(coefficients)
    harmonic, exact, coexact = hodge_parts(w)
    assert relative_difference(harmonic + exact + coexact, w) < 1e-12
    assert abs(inner(exact, coexact)) < 1e-10 * inner(w, w)


def test_leray_projection_is_divergence_free(velocity):
    pu = leray_project(velocity)
    assert delta_spec(pu).max_abs_coefficient() < 1e-12
    assert relative_difference(leray_project(pu), pu) < 1e-12


def test_exact_projection_lands_in_exact_range(magnetic):
    qb = exact_project(magnetic)
    assert d_spec(qb).max_abs_coefficient() < 1e-12
    assert harmonic_part(qb).max_abs_coefficient() == 0.0
    assert relative_difference(exact_project(qb), qb) < 1e-12


def test_projections_check_grades(velocity, magnetic):
    with pytest.raises(GradeError):
        leray_project(magnetic)
    with pytest.raises(GradeError):
        exact_project(velocity)


def test_exact_and_coexact_of_extreme_grades(grid3, rng):
    assert exact_part(random_field(grid3, 0, rng)).max_abs_coefficient() == 0.0
    assert coexact_part(random_field(grid3, 3, rng)).max_abs_coefficient() == 0.0


def test_jacobian_of_single_mode(grid3):
    u = single_mode(grid3, 1, 0, (0, 1, 0), phase="cos")
    jac = jacobian(u)
    x2 = grid3.mesh()[1]
    np.testing.assert_allclose(jac[1, 0], -np.sin(x2), atol=1e-12)
    np.testing.assert_allclose(jac[0, 0], 0.0, atol=1e-12)


# ----------------------------------------------------------------------------
# Semigroups
# ----------------------------------------------------------------------------


def test_heat_semigroup_damps_single_mode(grid3):
    w = single_mode(grid3, 1, 0, (1, 2, 0))
    evolved = heat_semigroup(0.3, w)
    np.testing.assert_allclose(evolved.to_physical(), math.exp(-0.3 * 5) * w.to_physical(), atol=1e-13)


def test_semigroup_property(magnetic):
    twice = maxwell_semigroup(0.1, maxwell_semigroup(0.2, magnetic))
    assert relative_difference(twice, maxwell_semigroup(0.3, magnetic)) < 1e-12


def test_negative_time_rejected(velocity):
    with pytest.raises(NegativeTimeError):
        stokes_semigroup(-1.0, velocity)
    with pytest.raises(NegativeTimeError):
        Semigroup.HEAT.apply(-0.5, velocity)


def test_semigroup_enum_projects(velocity, magnetic):
    assert Semigroup("stokes").grade == 1
    assert Semigroup.MAXWELL.grade == 2
    assert Semigroup.HEAT.grade is None
    assert relative_difference(Semigroup.STOKES.apply(0.1, velocity), stokes_semigroup(0.1, velocity)) < 1e-14
    assert relative_difference(Semigroup.MAXWELL.project(magnetic), exact_project(magnetic)) < 1e-14


def test_semigroup_at_zero_is_projection(magnetic):
    assert relative_difference(maxwell_semigroup(0.0, magnetic), exact_project(magnetic)) < 1e-14


# ----------------------------------------------------------------------------
# Norms
# ----------------------------------------------------------------------------


def test_lp_norm_of_constant(grid3):
    values = np.zeros((3,) + grid3.shape)
    values[0] = 2.0
    w = SpectralFormField.from_physical(grid3, 1, values)
    volume = (2 * math.pi) ** 3
    assert lp_norm(w, 3.0) == pytest.approx(2.0 * volume ** (1 / 3))
    assert lp_norm(w, math.inf) == pytest.approx(2.0)


def test_parseval_matches_grid_l2(magnetic):
    assert parseval_l2(magnetic) == pytest.approx(lp_norm(magnetic, 2.0), rel=1e-12)


def test_lp_norm_rejects_small_exponent(velocity):
    from mhdforms.exceptions import ExponentRelationError

    with pytest.raises(ExponentRelationError):
        lp_norm(velocity, 0.5)


# ----------------------------------------------------------------------------
# Products and probes
# ----------------------------------------------------------------------------


def test_dealias_mask_cutoff(grid3):
    mask = dealias_mask(grid3)
    assert mask[0, 0, 0]
    assert mask[5, 0, 0]  # |m| = 5 < 16/3
    assert not mask[6, 0, 0]
    assert not mask[0, 0, 8]


def test_wedge_of_low_modes_is_pointwise(grid3):
    a = single_mode(grid3, 1, 0, (1, 0, 0))
    b = single_mode(grid3, 1, 1, (0, 1, 0), phase="cos")
    product = wedge_fields(a, b).to_physical()
    x1, x2, _ = grid3.mesh()
    np.testing.assert_allclose(product[0], np.sin(x1) * np.cos(x2), atol=1e-12)


def test_contract_fields_matches_pointwise(grid3):
    x = single_mode(grid3, 1, 0, (1, 0, 0))
    w = single_mode(grid3, 2, 0, (0, 0, 1), phase="cos")  # e12 component
    result = contract_fields(x, w).to_physical()
    x1, _, x3 = grid3.mesh()
    np.testing.assert_allclose(result[1], np.sin(x1) * np.cos(x3), atol=1e-12)


def test_wedge_grade_overflow(grid3):
    with pytest.raises(GradeError):
        wedge_fields(SpectralFormField.zeros(grid3, 2), SpectralFormField.zeros(grid3, 2))


def test_dealias_removes_high_modes(grid3):
    high = single_mode(grid3, 1, 0, (6, 0, 0))
    assert dealias(high).max_abs_coefficient() == 0.0


def test_gaussian_probe_is_mean_zero_and_normalised(grid3):
    probe = gaussian_bump_probe(grid3, 2, 0.6)
    values = probe.to_physical()
    np.testing.assert_allclose(values.mean(axis=(1, 2, 3)), 0.0, atol=1e-13)
    assert np.max(np.abs(values)) == pytest.approx(1.0)


def test_random_field_is_band_limited(grid3, rng):
    w = random_field(grid3, 1, rng, max_mode=2, amplitude=3.0)
    outside = np.abs(grid3.mode_numbers[0]) > 2
    assert np.all(np.abs(w.coefficients[:, np.broadcast_to(outside, grid3.spectral_shape)]) < 1e-14)
    assert np.max(np.abs(w.to_physical())) == pytest.approx(3.0)


# ----------------------------------------------------------------------------
# Numeric identity suites
# ----------------------------------------------------------------------------


def test_spectral_complex_suite():
    report = check_spectral_complex(4, 8, 10, seed=3)
    assert report.passed, report.counterexample
    assert report.max_defect < 1e-12


def test_projection_and_range_suites():
    assert check_projections(3, 16, 10, seed=4).passed
    report = check_range_exclusion(3, 16, 10, seed=4)
    assert report.passed
    assert report.max_defect <= 1e-10


@pytest.mark.slow
def test_projection_acceptance():
    for suite in (check_spectral_complex, check_projections, check_range_exclusion):
        assert suite(3, 16, 50, seed=0).passed
