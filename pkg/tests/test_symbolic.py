"""
Tests for polynomial forms, the magic identity and the dimension-3 dictionary.
"""

import numpy as np
import pytest

from mhdforms.exceptions import GradeError, IndexRangeError
from mhdforms.symbolic import dictionary as dic
from mhdforms.symbolic.magic import magic_lhs, magic_rhs, strain_term
from mhdforms.symbolic.polyforms import (
    PolyForm,
    contract_sym,
    d_sym,
    delta_sym,
    grad_matrix,
    polynomial_algebra,
    random_polyform,
    trig_algebra,
    wedge_sym,
)
from mhdforms.symbolic.suites import (
    IdentityReport,
    check_complex,
    check_dictionary,
    check_leibniz,
    run_suite,
    trial_generators,
    verify_magic,
)

pytestmark = pytest.mark.unit


@pytest.fixture
def r3():
    return polynomial_algebra(3)


# ----------------------------------------------------------------------------
# PolyForm basics
# ----------------------------------------------------------------------------


def test_d_of_linear_one_form(r3):
    x1, x2, x3 = r3.gens
    w = PolyForm.from_components(r3, 1, {(2,): x1})
    assert d_sym(w) == PolyForm.from_components(r3, 2, {(1, 2): 1})


def test_delta_of_one_form_is_minus_divergence(r3):
    x1, x2, x3 = r3.gens
    u = PolyForm.from_components(r3, 1, {(1,): x1 * x2, (3,): x3**2})
    assert delta_sym(u) == PolyForm.from_components(r3, 0, {(): -(x2 + 2 * x3)})


def test_top_and_bottom_grades_vanish(r3):
    x1, _, _ = r3.gens
    top = PolyForm.from_components(r3, 3, {(1, 2, 3): x1})
    bottom = PolyForm.from_components(r3, 0, {(): x1})
    assert d_sym(top).is_zero()
    assert delta_sym(bottom).is_zero()


def test_form_grade_is_checked(r3):
    x1, _, _ = r3.gens
    with pytest.raises(GradeError):
        PolyForm.from_components(r3, 1, {(1, 2): x1})
    with pytest.raises(IndexRangeError):
        PolyForm.zero(r3, 4)


def test_sum_of_different_grades_rejected(r3):
    with pytest.raises(GradeError):
        PolyForm.zero(r3, 1) + PolyForm.zero(r3, 2)


def test_contract_sym_needs_one_form(r3):
    with pytest.raises(GradeError):
        contract_sym(PolyForm.zero(r3, 2), PolyForm.zero(r3, 2))


@pytest.mark.parametrize("dimension", [3, 4, 5])
def test_random_forms_satisfy_complex_identities(dimension):
    algebra = polynomial_algebra(dimension)
    rng = np.random.default_rng(dimension)
    for grade in range(dimension + 1):
        w = random_polyform(algebra, grade, 3, rng)
        if grade + 2 <= dimension:
            assert d_sym(d_sym(w)).is_zero()
        if grade >= 2:
            assert delta_sym(delta_sym(w)).is_zero()


def test_d_is_a_graded_derivation(r3):
    rng = np.random.default_rng(3)
    a = random_polyform(r3, 1, 2, rng)
    b = random_polyform(r3, 1, 2, rng)
    lhs = d_sym(wedge_sym(a, b))
    rhs = wedge_sym(d_sym(a), b) - wedge_sym(a, d_sym(b))
    assert lhs == rhs


def test_grad_matrix_entries(r3):
    x1, x2, x3 = r3.gens
    u = PolyForm.from_components(r3, 1, {(2,): x1 * x3})
    jac = grad_matrix(u)
    assert jac.entries[0][1] == x3  # ∂_1 u_2
    assert jac.entries[2][1] == x1
    assert jac.trace() == 0


def test_trig_algebra_derivatives():
    algebra = trig_algebra(2)
    c1, s1 = algebra.cos(1), algebra.sin(1)
    assert algebra.partial(c1, 1) == -s1
    assert algebra.partial(s1 * s1, 1) == 2 * s1 * c1
    assert algebra.partial(c1, 2) == 0
    x = np.linspace(0.0, 1.0, 5)
    values = algebra.evaluate(c1 * c1 + s1 * s1, (x, x))
    np.testing.assert_allclose(values, 1.0)


def test_random_polyform_is_reproducible(r3):
    first = random_polyform(r3, 2, 2, np.random.default_rng(9))
    second = random_polyform(r3, 2, 2, np.random.default_rng(9))
    assert first == second


# ----------------------------------------------------------------------------
# Magic identity
# ----------------------------------------------------------------------------


@pytest.mark.parametrize("dimension", [3, 4, 5, 6])
def test_magic_identity_on_random_pairs(dimension):
    algebra = polynomial_algebra(dimension)
    rng = np.random.default_rng(100 + dimension)
    for _ in range(3):
        u = random_polyform(algebra, 1, 2, rng)
        b = random_polyform(algebra, 2, 2, rng)
        assert magic_lhs(u, b) == magic_rhs(u, b)


def test_strain_term_vanishes_for_rigid_rotation(r3):
    x1, x2, _ = r3.gens
    # u = (-x2, x1, 0): antisymmetric gradient
    u = PolyForm.from_components(r3, 1, {(1,): -x2, (2,): x1})
    b = PolyForm.from_components(r3, 2, {(1, 2): 1, (2, 3): x1})
    assert strain_term(u, b).is_zero()


def test_magic_requires_grades(r3):
    with pytest.raises(GradeError):
        magic_lhs(PolyForm.zero(r3, 2), PolyForm.zero(r3, 2))


# ----------------------------------------------------------------------------
# Dictionary
# ----------------------------------------------------------------------------


def test_two_form_identification(r3):
    x1, x2, x3 = r3.gens
    v = PolyForm.from_components(r3, 2, {(2, 3): x1, (1, 3): x2, (1, 2): x3})
    assert dic.form_to_vector(v) == (x1, -x2, x3)
    assert dic.vector_to_form(r3, (x1, -x2, x3), 2) == v


def test_dictionary_requires_dimension_three():
    with pytest.raises(IndexRangeError):
        dic.form_to_vector(PolyForm.zero(polynomial_algebra(4), 1))


def test_scalar_identifications(r3):
    x1, x2, x3 = r3.gens
    f = x1**2 * x2 + x3
    assert dic.form_to_vector(d_sym(dic.scalar_to_form(r3, f, 0))) == dic.grad(r3, f)
    assert dic.form_to_vector(dic.scalar_to_form(r3, f, 3)) == f
    with pytest.raises(GradeError):
        dic.scalar_to_form(r3, f, 1)


def test_curl_of_gradient_vanishes(r3):
    x1, x2, x3 = r3.gens
    f = x1**2 * x2 + x3
    assert dic.curl(r3, dic.grad(r3, f)) == (0, 0, 0)


def test_induction_sign(r3):
    x1, x2, x3 = r3.gens
    u = PolyForm.from_components(r3, 1, {(1,): x2, (3,): x1 * x3})
    b = PolyForm.from_components(r3, 2, {(1, 2): x3, (2, 3): x1})
    uv, bv = dic.form_to_vector(u), dic.form_to_vector(b)
    assert dic.form_to_vector(d_sym(contract_sym(u, b))) == dic.curl(r3, dic.cross(bv, uv))


# ----------------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------------


def test_verify_magic_suite_passes():
    report = verify_magic(3, 2, 10, seed=1)
    assert isinstance(report, IdentityReport)
    assert report.passed
    assert report.trials == 10
    assert report.max_terms > 0
    assert report.counterexample is None


@pytest.mark.parametrize("dimension", [2, 7])
def test_verify_magic_dimension_range(dimension):
    with pytest.raises(IndexRangeError):
        verify_magic(dimension, 2, 1)


def test_verify_magic_degree_range():
    with pytest.raises(IndexRangeError):
        verify_magic(3, 5, 1)


def test_other_suites_pass():
    assert check_complex(4, 2, 20, seed=2).passed
    assert check_leibniz(3, 3, 10, seed=2).passed
    assert check_dictionary(2, 10, seed=2).passed


def test_zero_trials_is_vacuous():
    report = verify_magic(3, 2, 0)
    assert report.trials == 0
    assert report.passed


def test_run_suite_records_first_counterexample():
    outcomes = iter([(True, 1, "a"), (False, 2, "b", 0.5), (False, 3, "c")])
    report = run_suite("fake", 3, 1, 3, 0, lambda rng: next(outcomes))
    assert report.failures == 2
    assert report.counterexample == "b"
    assert report.max_terms == 3
    assert report.max_defect == 0.5
    assert not report.passed


def test_trial_generators_are_stable_and_independent():
    first = [g.integers(1 << 30) for g in trial_generators(5, "complex", 3, 4)]
    second = [g.integers(1 << 30) for g in trial_generators(5, "complex", 3, 4)]
    other = [g.integers(1 << 30) for g in trial_generators(5, "leibniz", 3, 4)]
    assert first == second
    assert first != other
    assert len(set(first)) == 4


@pytest.mark.slow
@pytest.mark.parametrize("dimension", [3, 4, 5, 6])
def test_magic_formula_acceptance(dimension):
    report = verify_magic(dimension, 3, 100, seed=0)
    assert report.failures == 0


@pytest.mark.slow
def test_complex_acceptance():
    for dimension in (3, 4, 5, 6):
        assert check_complex(dimension, 3, 200, seed=0).passed
    assert check_dictionary(3, 50, seed=0).passed
