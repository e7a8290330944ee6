"""The dimension-3 dictionary between forms and vector calculus.

Identifications on R³:

    Λ⁰ ≅ R         f            ↔ f
    Λ¹ ≅ R³        Σ u_i e_i    ↔ (u1, u2, u3)
    Λ² ≅ R³        V1 e23 - V2 e13 + V3 e12 ↔ (V1, V2, V3)
    Λ³ ≅ R         f e123       ↔ f

Under these, d is grad/curl/div on 0/1/2-forms and δ is -div/curl/-grad on
1/2/3-forms. The MHD nonlinearities translate as

    δb⌟b     ↔ B × curl B        (= -(curl B) × B)
    d(u⌟b)   ↔ curl(B × u)       (= -curl(u × B))

so both carry the opposite sign of the textbook Lorentz and induction
terms.
"""

from __future__ import annotations

from sympy.polys.rings import PolyElement

from mhdforms.exceptions import GradeError, IndexRangeError
from mhdforms.symbolic.polyforms import PolyForm, PolynomialAlgebra

Vector3 = tuple[PolyElement, PolyElement, PolyElement]

# 2-form blade -> (vector slot, sign)
_TWO_FORM_SLOTS = {(2, 3): (0, 1), (1, 3): (1, -1), (1, 2): (2, 1)}


def _require_dimension_three(algebra: PolynomialAlgebra) -> None:
    if algebra.dimension != 3:
        raise IndexRangeError(
            "the vector-calculus dictionary exists in dimension 3 only",
            value=algebra.dimension,
            dimension=algebra.dimension,
        )


def form_to_vector(w: PolyForm) -> Vector3 | PolyElement:
    """Translate a form on R³ to its scalar or vector counterpart."""
    _require_dimension_three(w.algebra)
    if w.grade == 0:
        return w.component(())
    if w.grade == 3:
        return w.component((1, 2, 3))
    if w.grade == 1:
        return tuple(w.component((i,)) for i in (1, 2, 3))  # type: ignore[return-value]
    slots = [w.algebra.zero] * 3
    for indices, (slot, sign) in _TWO_FORM_SLOTS.items():
        value = w.component(indices)
        slots[slot] = value if sign > 0 else -value
    return tuple(slots)  # type: ignore[return-value]


def scalar_to_form(algebra: PolynomialAlgebra, f: PolyElement, grade: int) -> PolyForm:
    """Lift a scalar to a 0-form or 3-form."""
    _require_dimension_three(algebra)
    if grade == 0:
        return PolyForm.from_components(algebra, 0, {(): f})
    if grade == 3:
        return PolyForm.from_components(algebra, 3, {(1, 2, 3): f})
    raise GradeError("scalars identify with 0-forms or 3-forms", expected="0 or 3", actual=grade)


def vector_to_form(algebra: PolynomialAlgebra, v: Vector3, grade: int) -> PolyForm:
    """Lift a vector field to a 1-form or a 2-form."""
    _require_dimension_three(algebra)
    if grade == 1:
        return PolyForm.from_components(algebra, 1, {(1,): v[0], (2,): v[1], (3,): v[2]})
    if grade == 2:
        return PolyForm.from_components(
            algebra,
            2,
            {
                indices: v[slot] if sign > 0 else -v[slot]
                for indices, (slot, sign) in _TWO_FORM_SLOTS.items()
            },
        )
    raise GradeError("vectors identify with 1-forms or 2-forms", expected="1 or 2", actual=grade)


def grad(algebra: PolynomialAlgebra, f: PolyElement) -> Vector3:
    return tuple(algebra.partial(f, i) for i in (1, 2, 3))  # type: ignore[return-value]


def curl(algebra: PolynomialAlgebra, v: Vector3) -> Vector3:
    p = algebra.partial
    return (
        p(v[2], 2) - p(v[1], 3),
        p(v[0], 3) - p(v[2], 1),
        p(v[1], 1) - p(v[0], 2),
    )


def div(algebra: PolynomialAlgebra, v: Vector3) -> PolyElement:
    p = algebra.partial
    return p(v[0], 1) + p(v[1], 2) + p(v[2], 3)


def cross(a: Vector3, b: Vector3) -> Vector3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def negate(v: Vector3) -> Vector3:
    return (-v[0], -v[1], -v[2])


def lorentz_vector(algebra: PolynomialAlgebra, magnetic: Vector3) -> Vector3:
    """Vector counterpart of δb⌟b: B × curl B."""
    return cross(magnetic, curl(algebra, magnetic))


def induction_vector(algebra: PolynomialAlgebra, velocity: Vector3, magnetic: Vector3) -> Vector3:
    """Vector counterpart of d(u⌟b): curl(B × u)."""
    return curl(algebra, cross(magnetic, velocity))


__all__ = [
    "cross",
    "curl",
    "div",
    "form_to_vector",
    "grad",
    "induction_vector",
    "lorentz_vector",
    "negate",
    "scalar_to_form",
    "vector_to_form",
]
