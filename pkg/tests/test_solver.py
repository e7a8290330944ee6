"""
Tests for the mild-solution solver: nonlinear terms, Picard, horizon search, monitors.
"""

import math

import numpy as np
import pytest

from mhdforms.exceptions import (
    GradeError,
    GridMismatchError,
    HorizonUnderflowError,
    MeshError,
    NonContractionError,
)
from mhdforms.solver import (
    BilinearConstant,
    CriticalNorms,
    FieldSpec,
    MildTrajectory,
    SolverConfig,
    bilinear_b1,
    bilinear_b3,
    build_initial_data,
    constant_spread,
    critical_norms,
    db_monitor,
    graded_mesh,
    induction_dual_path,
    initial_data_norms,
    local_T_search,
    measure_bilinear_constant,
    measure_bilinear_constants,
    nonlin_convection,
    nonlin_induction,
    nonlin_lorentz,
    picard_solve,
    scaling_check,
    trajectory_distance,
)
from mhdforms.solver.initial_data import exact_magnetic, taylor_green_velocity
from mhdforms.solver.monitors import check_dual_path, range_exclusion_defect, rescale_field
from mhdforms.spectral import (
    SpectralFormField,
    d_spec,
    delta_spec,
    exact_project,
    leray_project,
    random_field,
    single_mode,
)

pytestmark = pytest.mark.unit


@pytest.fixture
def config():
    return SolverConfig(grid_points=8, mesh_nodes=8, horizon=0.5, max_iterations=40)


@pytest.fixture
def small_data(config):
    grid = config.grid
    return taylor_green_velocity(grid, 0.05), exact_magnetic(grid, 0.05)


# ----------------------------------------------------------------------------
# Configuration and initial data
# ----------------------------------------------------------------------------


def test_solver_config_validates():
    with pytest.raises(ValueError):
        SolverConfig(grid_points=12)
    with pytest.raises(ValueError):
        SolverConfig(horizon=math.inf)
    with pytest.raises(ValueError):
        SolverConfig(unknown=1)


def test_solver_config_builds_grid_and_mesh(config):
    assert config.grid.shape == (8, 8, 8)
    assert config.mesh.nodes == 8
    assert config.mesh.horizon == 0.5


def test_initial_data_builders(config):
    grid = config.grid
    u0, b0 = build_initial_data(
        FieldSpec(builder="taylor_green", amplitude=0.3),
        FieldSpec(builder="exact_potential", amplitude=0.2),
        grid,
        seed=0,
    )
    assert delta_spec(u0).max_abs_coefficient() < 1e-14
    assert np.max(np.abs(b0.to_physical())) == pytest.approx(0.2)
    assert (b0 - exact_project(b0)).max_abs_coefficient() < 1e-14


def test_random_initial_data_is_seeded(config):
    entry = FieldSpec(builder="random", amplitude=0.1)
    first = build_initial_data(entry, entry, config.grid, seed=5)
    second = build_initial_data(entry, entry, config.grid, seed=5)
    np.testing.assert_array_equal(first[1].coefficients, second[1].coefficients)


def test_builders_check_grade(config):
    with pytest.raises(GradeError):
        build_initial_data(FieldSpec(), FieldSpec(builder="taylor_green", amplitude=1.0), config.grid, 0)


def test_file_builder_needs_a_path(config):
    with pytest.raises(FileNotFoundError):
        build_initial_data(FieldSpec(builder="file"), FieldSpec(), config.grid, 0)


# ----------------------------------------------------------------------------
# Nonlinear terms
# ----------------------------------------------------------------------------


def test_convection_of_single_mode(grid3):
    shear = single_mode(grid3, 1, 0, (0, 1, 0))
    assert nonlin_convection(shear).max_abs_coefficient() < 1e-14
    u = single_mode(grid3, 1, 0, (1, 0, 0))
    x1 = grid3.mesh()[0]
    np.testing.assert_allclose(nonlin_convection(u).to_physical()[0], 0.5 * np.sin(2 * x1), atol=1e-13)


def test_induction_is_exact(velocity, magnetic):
    induction = nonlin_induction(leray_project(velocity), exact_project(magnetic))
    assert d_spec(induction).max_abs_coefficient() < 1e-12
    assert (induction - exact_project(induction)).max_abs_coefficient() < 1e-12
    assert nonlin_lorentz(magnetic).grade == 1


def test_induction_dual_path_agrees(velocity, magnetic):
    _, defect = induction_dual_path(velocity, magnetic)
    assert defect < 1e-8
    assert check_dual_path(3, 16, 5, seed=1).passed


def test_range_exclusion_defect_is_roundoff(velocity, magnetic):
    assert range_exclusion_defect(velocity, magnetic) < 1e-10


def test_nonlinear_terms_check_grades(velocity, magnetic):
    with pytest.raises(GradeError):
        nonlin_convection(magnetic)
    with pytest.raises(GradeError):
        nonlin_induction(magnetic, velocity)


# ----------------------------------------------------------------------------
# Bilinear operators
# ----------------------------------------------------------------------------


def test_bilinear_of_zero_is_zero(config):
    mesh = config.mesh
    zeros_u = [SpectralFormField.zeros(config.grid, 1)] * len(mesh)
    zeros_b = [SpectralFormField.zeros(config.grid, 2)] * len(mesh)
    assert bilinear_b1(zeros_u, zeros_u, mesh).ratio == 0.0
    assert bilinear_b3(zeros_u, zeros_b, mesh).norm == 0.0


def test_bilinear_inputs_cover_the_mesh(config):
    mesh = config.mesh
    short = [SpectralFormField.zeros(config.grid, 1)] * 3
    with pytest.raises(MeshError):
        bilinear_b1(short, short, mesh)


def test_measured_bilinear_constant_is_finite(config):
    measured = measure_bilinear_constant(config, horizon=0.25)
    assert measured.horizon == 0.25
    assert measured.width == pytest.approx(0.5)
    for ratio in (measured.b1_ratio, measured.b2_ratio, measured.b3_ratio):
        assert math.isfinite(ratio)
        assert ratio > 0.0
    assert measured.constant == max(measured.b1_ratio, measured.b2_ratio, measured.b3_ratio)


def test_bilinear_constants_start_at_a_quarter(config):
    measured = measure_bilinear_constants(config)
    assert [m.horizon for m in measured] == [0.25, 0.125, 0.0625]
    assert [m.width for m in measured] == pytest.approx([0.5, 0.5 / math.sqrt(2), 0.25])
    assert 0.0 <= constant_spread(measured) < 1.0
    with pytest.raises(ValueError):
        measure_bilinear_constants(config, count=0)


def test_constant_spread():
    def constant(value):
        return BilinearConstant(horizon=1.0, width=1.0, b1_ratio=value, b2_ratio=0.0, b3_ratio=0.0)

    assert constant_spread([]) == 0.0
    assert constant_spread([constant(0.0), constant(0.0)]) == 0.0
    assert constant_spread([constant(1.0), constant(0.8), constant(0.9)]) == pytest.approx(0.2)


# ----------------------------------------------------------------------------
# Norms and trajectories
# ----------------------------------------------------------------------------


def test_critical_norms_of_zero_trajectory(config):
    grid, mesh = config.grid, config.mesh
    trajectory = MildTrajectory.linear(SpectralFormField.zeros(grid, 1), SpectralFormField.zeros(grid, 2), mesh)
    assert trajectory.norms() == CriticalNorms()
    assert trajectory_distance(mesh.times, trajectory.pairs(), trajectory.pairs()) == 0.0


def test_critical_norms_are_weighted(config, small_data):
    u0, b0 = small_data
    mesh = config.mesh
    trajectory = MildTrajectory.linear(u0, b0, mesh)
    norms = critical_norms(mesh.times, trajectory.velocity, trajectory.magnetic)
    assert norms.total == pytest.approx(norms.velocity_norm + norms.magnetic_norm)
    assert norms.velocity_continuity > 0.0
    assert norms.total > 0.0


def test_trajectory_requires_every_node(config, small_data):
    u0, b0 = small_data
    with pytest.raises(MeshError):
        MildTrajectory(config.mesh, [u0], [b0])


# ----------------------------------------------------------------------------
# Picard iteration
# ----------------------------------------------------------------------------


def test_zero_data_converges_immediately(config):
    grid = config.grid
    trajectory, log = picard_solve(SpectralFormField.zeros(grid, 1), SpectralFormField.zeros(grid, 2), config)
    assert log.converged
    assert log.iterations == 1
    assert log.residual == 0.0
    assert trajectory.norms().total == 0.0


def test_small_data_contracts(config, small_data):
    trajectory, log = picard_solve(*small_data, config)
    assert log.converged
    assert log.iterations >= 4
    assert log.residual < config.tolerance
    assert all(ratio < 0.5 for ratio in log.ratios)
    assert trajectory.divergence_defect() < 1e-12
    assert trajectory.exact_range_defect() < 1e-12
    assert db_monitor(trajectory) < 1e-10
    assert all(record.dual_path_defect < 1e-8 for record in log.records)


def test_linear_run_skips_iteration(config, small_data):
    linear = config.model_copy(update={"nonlinear": False})
    trajectory, log = picard_solve(*small_data, linear)
    assert log.converged
    assert log.iterations == 1
    u_T, _ = trajectory.at(0.5)
    expected = MildTrajectory.linear(leray_project(small_data[0]), exact_project(small_data[1]), linear.mesh)
    assert (u_T - expected.velocity[-1]).max_abs_coefficient() < 1e-12


def test_iteration_cap_reports_not_converged(config, small_data):
    capped = config.model_copy(update={"max_iterations": 2, "tolerance": 1e-300})
    _, log = picard_solve(*small_data, capped)
    assert not log.converged
    assert log.iterations == 2


def test_large_data_fails_to_contract(config):
    grid = config.grid
    with pytest.raises(NonContractionError) as excinfo:
        picard_solve(taylor_green_velocity(grid, 200.0), exact_magnetic(grid, 200.0), config)
    assert len(excinfo.value.distances) >= 2


def test_picard_rejects_foreign_grid(config, grid3):
    with pytest.raises(GridMismatchError):
        picard_solve(SpectralFormField.zeros(grid3, 1), SpectralFormField.zeros(grid3, 2), config)


# ----------------------------------------------------------------------------
# Horizon search
# ----------------------------------------------------------------------------


def test_data_norm_is_monotone_in_horizon(small_data):
    config = SolverConfig(grid_points=8, mesh_nodes=8, horizon=1.0, max_halvings=6)
    norms = initial_data_norms(*small_data, config)
    assert len(norms) == 7
    assert all(a >= b for a, b in zip(norms, norms[1:]))


def test_search_halves_until_small(small_data):
    config = SolverConfig(grid_points=8, mesh_nodes=8, horizon=1.0, max_halvings=6)
    norms = initial_data_norms(*small_data, config)
    target = norms[2]
    search = local_T_search(*small_data, target, config)
    assert search.norms[-1] <= target
    assert all(norm > target for norm in search.norms[:-1])
    assert search.horizon >= 0.25


def test_search_accepts_zero_data_at_once(config):
    grid = config.grid
    search = local_T_search(SpectralFormField.zeros(grid, 1), SpectralFormField.zeros(grid, 2), 0.1, config)
    assert search.horizons == [config.horizon]


def test_search_underflow(config):
    grid = config.grid
    tight = config.model_copy(update={"max_halvings": 3})
    with pytest.raises(HorizonUnderflowError) as excinfo:
        local_T_search(taylor_green_velocity(grid, 1e6), exact_magnetic(grid, 1e6), 0.1, tight)
    assert len(excinfo.value.horizons) == 4
    assert excinfo.value.target == 0.1


@pytest.mark.parametrize("epsilon", [0.0, -1.0])
def test_search_rejects_bad_target(config, small_data, epsilon):
    with pytest.raises(ValueError):
        local_T_search(*small_data, epsilon, config)


# ----------------------------------------------------------------------------
# Scaling covariance
# ----------------------------------------------------------------------------


def test_rescale_field(velocity):
    scaled = rescale_field(velocity, 2.0)
    assert scaled.grid.period == pytest.approx(math.pi)
    np.testing.assert_allclose(scaled.to_physical(), 2.0 * velocity.to_physical(), atol=1e-13)


def test_linear_flow_is_scale_covariant(config, small_data):
    linear = config.model_copy(update={"nonlinear": False})
    report = scaling_check(*small_data, 2.0, 0.5, linear)
    assert report.defect <= 1e-10


def test_nonlinear_flow_is_scale_covariant(config, small_data):
    report = scaling_check(*small_data, 2.0, 0.5, config)
    assert report.defect <= 1e-8


def test_scaling_check_rejects_bad_input(config, small_data):
    with pytest.raises(GridMismatchError):
        scaling_check(*small_data, 0.0, 0.5, config)
    with pytest.raises(MeshError):
        scaling_check(*small_data, 2.0, 0.3, config)


@pytest.mark.slow
def test_small_taylor_green_acceptance():
    config = SolverConfig(grid_points=32, mesh_nodes=128, horizon=1.0)
    grid = config.grid
    trajectory, log = picard_solve(taylor_green_velocity(grid, 0.02), exact_magnetic(grid, 0.02), config)
    assert log.converged
    assert db_monitor(trajectory) < 1e-10


@pytest.mark.slow
def test_bilinear_constant_is_horizon_independent():
    config = SolverConfig(grid_points=32, horizon=0.25)
    measured = measure_bilinear_constants(config)
    assert [m.horizon for m in measured] == [0.25, 0.125, 0.0625]
    assert constant_spread(measured) < 0.2


def test_random_data_runs(config):
    rng = np.random.default_rng(1)
    u0 = random_field(config.grid, 1, rng, amplitude=0.01)
    b0 = random_field(config.grid, 2, rng, amplitude=0.01)
    trajectory, log = picard_solve(u0, b0, config)
    assert log.converged
    assert len(trajectory) == len(graded_mesh(0.5, 8))
