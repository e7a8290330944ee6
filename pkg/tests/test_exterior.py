"""
Tests for the pointwise exterior algebra.
"""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhdforms.exceptions import DimensionMismatchError, GradeError, IndexRangeError, UnitNormError
from mhdforms.exterior import (
    AntisymMatrix2Form,
    Blade,
    Multivector,
    blades_of_grade,
    contract,
    contraction_table,
    grade_project,
    interior_sign,
    matrix_to_2form,
    normal_split,
    wedge,
    wedge_sign,
    wedge_table,
)

pytestmark = pytest.mark.unit

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def vectors(n: int):
    return st.lists(small_fractions, min_size=n, max_size=n).map(lambda c: Multivector.vector(n, c))


def homogeneous(n: int, grade: int):
    count = len(blades_of_grade(n, grade))
    return st.lists(small_fractions, min_size=count, max_size=count).map(
        lambda c: Multivector(n, dict(zip(blades_of_grade(n, grade), c)))
    )


# ----------------------------------------------------------------------------
# Blades
# ----------------------------------------------------------------------------


def test_blade_from_indices_sets_bits():
    blade = Blade.from_indices([1, 3])
    assert blade.mask == 0b101
    assert blade.grade == 2
    assert blade.indices == (1, 3)
    assert str(blade) == "e{1,3}"
    assert str(Blade(0)) == "1"


@pytest.mark.parametrize("indices", [[2, 1], [1, 1], [0, 2]])
def test_blade_rejects_unordered_indices(indices):
    with pytest.raises(IndexRangeError):
        Blade.from_indices(indices)


def test_blades_of_grade_is_lexicographic():
    assert [b.indices for b in blades_of_grade(3, 2)] == [(1, 2), (1, 3), (2, 3)]
    assert [b.indices for b in blades_of_grade(4, 3)] == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert blades_of_grade(5, 0) == (Blade(0),)


def test_blades_of_grade_rejects_bad_grade():
    with pytest.raises(IndexRangeError):
        blades_of_grade(3, 4)


def test_wedge_sign_counts_transpositions():
    assert wedge_sign(0b01, 0b10) == 1
    assert wedge_sign(0b10, 0b01) == -1
    assert wedge_sign(0b100, 0b011) == 1
    assert wedge_sign(0b010, 0b101) == -1
    assert wedge_sign(0b011, 0b010) == 0


def test_interior_sign_by_slot():
    assert interior_sign(1, 0b011) == 1
    assert interior_sign(2, 0b011) == -1
    assert interior_sign(3, 0b111) == 1


# ----------------------------------------------------------------------------
# Products
# ----------------------------------------------------------------------------


def test_basis_products():
    e1, e2 = Multivector.basis(3, 1), Multivector.basis(3, 2)
    e12 = Multivector.basis(3, 1, 2)
    assert wedge(e1, e2) == e12
    assert wedge(e2, e1) == -e12
    assert wedge(e1, e1).is_zero()
    assert contract(e1, e12) == e2
    assert contract(e2, e12) == -e1


@settings(max_examples=60, deadline=None)
@given(vectors(4), vectors(4))
def test_vectors_anticommute(a, b):
    assert wedge(a, b) == -wedge(b, a)


@settings(max_examples=40, deadline=None)
@given(vectors(4), homogeneous(4, 1), homogeneous(4, 2))
def test_wedge_is_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@settings(max_examples=40, deadline=None)
@given(vectors(4), homogeneous(4, 2), homogeneous(4, 1))
def test_contraction_is_an_antiderivation(x, a, b):
    lhs = contract(x, wedge(a, b))
    rhs = wedge(contract(x, a), b) + wedge(a, contract(x, b))  # deg a = 2
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(vectors(3), homogeneous(3, 2))
def test_contraction_twice_vanishes(x, w):
    assert contract(x, contract(x, w)).is_zero()


@settings(max_examples=40, deadline=None)
@given(vectors(3), homogeneous(3, 1))
def test_contraction_of_wedge_gives_norm(x, w):
    total = contract(x, wedge(x, w)) + wedge(x, contract(x, w))
    assert total == w * x.norm_squared()


def test_contract_requires_vector():
    with pytest.raises(GradeError):
        contract(Multivector.basis(3, 1, 2), Multivector.basis(3, 1, 2, 3))


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatchError):
        wedge(Multivector.basis(3, 1), Multivector.basis(4, 2))
    with pytest.raises(DimensionMismatchError):
        Multivector.basis(3, 1) + Multivector.basis(4, 1)


def test_blade_outside_dimension_rejected():
    with pytest.raises(IndexRangeError):
        Multivector.basis(3, 4)


# ----------------------------------------------------------------------------
# Arithmetic, normal split and 2-form matrices
# ----------------------------------------------------------------------------


def test_zero_coefficients_are_dropped():
    w = Multivector.from_terms(3, {(1,): Fraction(0), (2,): Fraction(1, 2)})
    assert w.sorted_items() == [(Blade.from_indices([2]), Fraction(1, 2))]
    assert (w - w).is_zero()
    assert w * 2 == Multivector.basis(3, 2)


def test_homogeneous_grade_and_projection():
    w = Multivector.basis(3, 1) + Multivector.basis(3, 2, 3)
    with pytest.raises(GradeError):
        w.homogeneous_grade()
    assert grade_project(w, 2).homogeneous_grade() == 2
    assert Multivector.zero(3).homogeneous_grade() is None


def test_norms():
    w = Multivector.vector(3, [Fraction(3), Fraction(4), Fraction(0)])
    assert w.norm_squared() == 25
    assert w.norm() == pytest.approx(5.0)


@settings(max_examples=40, deadline=None)
@given(homogeneous(3, 2))
def test_normal_split_recovers_form(u):
    nu = Multivector.vector(3, [Fraction(3, 5), Fraction(0), Fraction(4, 5)])
    tangential, normal = normal_split(nu, u)
    assert tangential + normal == u
    assert contract(nu, tangential).is_zero()
    assert wedge(nu, normal).is_zero()


def test_normal_split_rejects_non_unit():
    with pytest.raises(UnitNormError):
        normal_split(Multivector.vector(3, [Fraction(1), Fraction(1), Fraction(0)]), Multivector.basis(3, 1))
    with pytest.raises(UnitNormError):
        normal_split(Multivector.vector(3, [0.5, 0.0, 0.0]), Multivector.basis(3, 1))


def test_matrix_to_2form_takes_antisymmetric_part():
    matrix = [[Fraction(i * 3 + j) for j in range(3)] for i in range(3)]
    b = matrix_to_2form(matrix)
    for i, j in product(range(3), repeat=2):
        if i < j:
            assert b.coefficient((i + 1, j + 1)) == matrix[i][j] - matrix[j][i]


@settings(max_examples=30, deadline=None)
@given(homogeneous(4, 2))
def test_antisym_matrix_round_trip(b):
    m = AntisymMatrix2Form.from_multivector(b, zero=Fraction(0))
    assert m.to_multivector() == b
    diff = m.difference_transpose()
    for blade in blades_of_grade(4, 2):
        j, k = (i - 1 for i in blade.indices)
        assert diff[j][k] == b.coefficient(blade)
        assert diff[k][j] == -b.coefficient(blade)


def test_antisym_matrix_rejects_symmetric_entries():
    with pytest.raises(GradeError):
        AntisymMatrix2Form(2, ((0, 1), (1, 0)))


# ----------------------------------------------------------------------------
# Tables
# ----------------------------------------------------------------------------


def test_tables_match_multivector_products():
    n = 4
    for left_grade, right_grade in [(1, 1), (1, 2), (2, 2)]:
        lefts = blades_of_grade(n, left_grade)
        rights = blades_of_grade(n, right_grade)
        targets = blades_of_grade(n, left_grade + right_grade)
        for entry in wedge_table(n, left_grade, right_grade):
            product_ = wedge(Multivector(n, {lefts[entry.left]: 1}), Multivector(n, {rights[entry.right]: 1}))
            assert product_ == Multivector(n, {targets[entry.target]: entry.sign})
    sources = blades_of_grade(n, 2)
    targets = blades_of_grade(n, 1)
    for entry in contraction_table(n, 2):
        x = Multivector.basis(n, entry.axis + 1)
        assert contract(x, Multivector(n, {sources[entry.source]: 1})) == Multivector(
            n, {targets[entry.target]: entry.sign}
        )


def test_table_sizes():
    assert len(wedge_table(3, 1, 1)) == 6
    assert wedge_table(3, 2, 2) == ()
    assert len(contraction_table(3, 2)) == 6
    assert contraction_table(3, 0) == ()
