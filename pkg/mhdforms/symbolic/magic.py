"""Both sides of the Leibniz-type identity for d(u⌟b) + δ(u∧b).

For a 1-form u and a 2-form b:

    d(u⌟b) + δ(u∧b) = δu∧b - u∧δb - u⌟db + (∇u + ∇uᵀ)·(b - bᵀ)

where b is read as the antisymmetric matrix of :class:`AntisymMatrix2Form`
and the last term is mapped back with :func:`matrix_to_2form`. Each side
is evaluated independently so that equality is a genuine check.
"""

from __future__ import annotations

from mhdforms.exceptions import DimensionMismatchError, GradeError
from mhdforms.exterior.multivector import AntisymMatrix2Form, matrix_to_2form
from mhdforms.symbolic.polyforms import (
    PolyForm,
    contract_sym,
    d_sym,
    delta_sym,
    grad_matrix,
    wedge_sym,
)


def _check_pair(u: PolyForm, b: PolyForm) -> None:
    if u.grade != 1:
        raise GradeError("u must be a 1-form", expected=1, actual=u.grade)
    if b.grade != 2:
        raise GradeError("b must be a 2-form", expected=2, actual=b.grade)
    if u.algebra is not b.algebra:
        raise DimensionMismatchError(
            "u and b live over different coefficient algebras",
            left=u.dimension,
            right=b.dimension,
        )


def magic_lhs(u: PolyForm, b: PolyForm) -> PolyForm:
    """d(u⌟b) + δ(u∧b)."""
    _check_pair(u, b)
    lhs = d_sym(contract_sym(u, b))
    if u.dimension >= 3:
        lhs = lhs + delta_sym(wedge_sym(u, b))
    return lhs


def strain_term(u: PolyForm, b: PolyForm) -> PolyForm:
    """The matrix term (∇u + ∇uᵀ)·(b - bᵀ) as a 2-form."""
    _check_pair(u, b)
    jacobian = grad_matrix(u)
    symmetric = jacobian + jacobian.transpose()
    antisym = AntisymMatrix2Form.from_multivector(b.terms, zero=u.algebra.zero)
    product = symmetric.matmul(antisym.difference_transpose())
    return PolyForm(u.algebra, 2, matrix_to_2form(product))


def magic_rhs(u: PolyForm, b: PolyForm) -> PolyForm:
    """δu∧b - u∧δb - u⌟db + (∇u + ∇uᵀ)·(b - bᵀ)."""
    _check_pair(u, b)
    rhs = wedge_sym(delta_sym(u), b) - wedge_sym(u, delta_sym(b))
    if u.dimension >= 3:
        rhs = rhs - contract_sym(u, d_sym(b))
    return rhs + strain_term(u, b)


__all__ = ["magic_lhs", "magic_rhs", "strain_term"]
