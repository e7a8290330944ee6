"""Multivectors of Λ(Rⁿ) and the pointwise products used throughout mhdforms.

Coefficients may be any commutative ring element that supports ``+``,
``-``, ``*`` and truthiness for zero: :class:`fractions.Fraction` for the
exact back end, ``float`` for the numeric one, and sympy polynomial ring
elements for :mod:`mhdforms.symbolic`.

Example:
    >>> e1 = Multivector.basis(3, 1)
    >>> e2 = Multivector.basis(3, 2)
    >>> wedge(e1, e2) == Multivector.basis(3, 1, 2)
    True
    >>> contract(e2, Multivector.basis(3, 1, 2)) == -e1
    True
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Sequence

from mhdforms.exceptions import (
    DimensionMismatchError,
    GradeError,
    IndexRangeError,
    UnitNormError,
)
from mhdforms.exterior import blades as _blades
from mhdforms.exterior.blades import Blade, check_dimension

FLOAT_UNIT_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class Multivector:
    """Graded coefficient table over the basis blades of Λ(Rⁿ).

    Zero coefficients are dropped on construction, so equality is plain
    comparison of the stored tables.
    """

    dimension: int
    coeffs: Mapping[Blade, Any]

    def __post_init__(self) -> None:
        check_dimension(self.dimension)
        cleaned: dict[Blade, Any] = {}
        for key, value in self.coeffs.items():
            blade = key if isinstance(key, Blade) else Blade(key)
            if blade.top_index > self.dimension:
                raise IndexRangeError(
                    f"blade {blade} is not a blade of Λ(R^{self.dimension})",
                    value=blade.indices,
                    dimension=self.dimension,
                )
            if value:
                cleaned[blade] = value
        object.__setattr__(self, "coeffs", MappingProxyType(cleaned))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, dimension: int) -> "Multivector":
        return cls(dimension, {})

    @classmethod
    def scalar(cls, dimension: int, value: Any) -> "Multivector":
        return cls(dimension, {Blade(0): value})

    @classmethod
    def basis(cls, dimension: int, *indices: int, coefficient: Any = 1) -> "Multivector":
        """The blade e_{indices} times ``coefficient``."""
        return cls(dimension, {Blade.from_indices(indices): coefficient})

    @classmethod
    def vector(cls, dimension: int, components: Sequence[Any]) -> "Multivector":
        """Grade-1 element Σ components[i-1] e_i."""
        if len(components) != dimension:
            raise DimensionMismatchError(
                "vector needs one component per axis",
                left=dimension,
                right=len(components),
            )
        return cls(dimension, {Blade(1 << i): c for i, c in enumerate(components)})

    @classmethod
    def from_terms(
        cls, dimension: int, terms: Mapping[tuple[int, ...], Any]
    ) -> "Multivector":
        """Build from a mapping of index tuples to coefficients."""
        return cls(dimension, {Blade.from_indices(k): v for k, v in terms.items()})

    # -- inspection -------------------------------------------------------

    def grades(self) -> frozenset[int]:
        return frozenset(blade.grade for blade in self.coeffs)

    def homogeneous_grade(self) -> int | None:
        """Grade of a homogeneous element, None for zero.

        Raises:
            GradeError: if several grades are present
        """
        grades = self.grades()
        if not grades:
            return None
        if len(grades) > 1:
            raise GradeError(
                "multivector is not homogeneous", expected="single grade", actual=sorted(grades)
            )
        return next(iter(grades))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, blade: Blade | Iterable[int]) -> Any:
        if not isinstance(blade, Blade):
            blade = Blade.from_indices(blade)
        return self.coeffs.get(blade, 0)

    def sorted_items(self) -> list[tuple[Blade, Any]]:
        return sorted(self.coeffs.items(), key=lambda item: item[0].sort_key())

    def map_coefficients(self, fn) -> "Multivector":
        return Multivector(self.dimension, {b: fn(c) for b, c in self.coeffs.items()})

    def norm_squared(self) -> Any:
        """Exact euclidean squared norm Σ c_J² (0 for the zero element)."""
        total: Any = 0
        for value in self.coeffs.values():
            total = total + value * value
        return total

    def norm(self) -> float:
        return math.sqrt(float(self.norm_squared()))

    def term_count(self) -> int:
        """Number of stored terms, counting polynomial monomials when present."""
        count = 0
        for value in self.coeffs.values():
            count += len(value) if hasattr(value, "terms") else 1
        return count

    # -- arithmetic -------------------------------------------------------

    def _check_same(self, other: "Multivector", operation: str) -> None:
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f"{operation} of elements of different dimension",
                left=self.dimension,
                right=other.dimension,
            )

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other, "sum")
        out = dict(self.coeffs)
        for blade, value in other.coeffs.items():
            out[blade] = out[blade] + value if blade in out else value
        return Multivector(self.dimension, out)

    def __neg__(self) -> "Multivector":
        return Multivector(self.dimension, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor: Any) -> "Multivector":
        if isinstance(factor, Multivector):
            return NotImplemented
        return Multivector(self.dimension, {b: factor * c for b, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, divisor: Any) -> "Multivector":
        return Multivector(self.dimension, {b: c / divisor for b, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dimension == other.dimension and dict(self.coeffs) == dict(other.coeffs)

    __hash__ = None  # type: ignore[assignment]

    def isclose(self, other: "Multivector", tolerance: float = 1e-12) -> bool:
        """Float comparison: every coefficient of the difference within tolerance."""
        self._check_same(other, "comparison")
        return all(abs(float(c)) <= tolerance for c in (self - other).coeffs.values())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{b}" for b, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"Multivector(dimension={self.dimension}, {self})"


def _check_dimensions(a: Multivector, b: Multivector, operation: str) -> None:
    if a.dimension != b.dimension:
        raise DimensionMismatchError(
            f"{operation} of elements of Λ(R^{a.dimension}) and Λ(R^{b.dimension})",
            left=a.dimension,
            right=b.dimension,
        )


def _require_vector(x: Multivector, operation: str) -> None:
    grades = x.grades()
    if grades and grades != {1}:
        raise GradeError(f"{operation} needs a grade-1 element", expected=1, actual=sorted(grades))


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product a ∧ b (bilinear, zero on repeated indices)."""
    _check_dimensions(a, b, "wedge")
    out: dict[Blade, Any] = {}
    for left, lc in a.coeffs.items():
        for right, rc in b.coeffs.items():
            sign = _blades.wedge_sign(left.mask, right.mask)
            if not sign:
                continue
            term = lc * rc if sign > 0 else -(lc * rc)
            key = Blade(left.mask | right.mask)
            out[key] = out[key] + term if key in out else term
    return Multivector(a.dimension, out)


def contract(x: Multivector, w: Multivector) -> Multivector:
    """Left interior product x ⌟ w by a grade-1 element x.

    Raises:
        GradeError: if ``x`` is not grade 1
        DimensionMismatchError: if the dimensions differ
    """
    _check_dimensions(x, w, "contraction")
    _require_vector(x, "contraction")
    out: dict[Blade, Any] = {}
    for vector_blade, xc in x.coeffs.items():
        index = vector_blade.indices[0]
        bit = vector_blade.mask
        for blade, wc in w.coeffs.items():
            if not blade.mask & bit:
                continue
            sign = _blades.interior_sign(index, blade.mask)
            term = xc * wc if sign > 0 else -(xc * wc)
            key = Blade(blade.mask ^ bit)
            out[key] = out[key] + term if key in out else term
    return Multivector(x.dimension, out)


def _is_exact(value: Any) -> bool:
    return isinstance(value, Rational)


def normal_split(nu: Multivector, u: Multivector) -> tuple[Multivector, Multivector]:
    """Split u into tangential ν⌟(ν∧u) and normal ν∧(ν⌟u) parts.

    Raises:
        GradeError: if ``nu`` is not grade 1
        UnitNormError: if |ν| ≠ 1 (exactly for rationals, within 1e-12 for floats)
    """
    _check_dimensions(nu, u, "normal split")
    _require_vector(nu, "normal split")
    norm_squared = nu.norm_squared()
    if all(_is_exact(c) for c in nu.coeffs.values()):
        if norm_squared != 1:
            raise UnitNormError(
                f"normal has squared norm {norm_squared}, expected 1",
                norm_squared=float(norm_squared),
                tolerance=0.0,
            )
    elif abs(float(norm_squared) - 1.0) > FLOAT_UNIT_TOLERANCE:
        raise UnitNormError(
            f"normal has squared norm {float(norm_squared)!r}, expected 1",
            norm_squared=float(norm_squared),
            tolerance=FLOAT_UNIT_TOLERANCE,
        )
    tangential = contract(nu, wedge(nu, u))
    normal = wedge(nu, contract(nu, u))
    return tangential, normal


def grade_project(w: Multivector, grade: int) -> Multivector:
    """Keep exactly the grade-ℓ coefficients of w."""
    if grade < 0 or grade > w.dimension:
        raise IndexRangeError(
            f"grade {grade} outside 0..{w.dimension}", value=grade, dimension=w.dimension
        )
    return Multivector(w.dimension, {b: c for b, c in w.coeffs.items() if b.grade == grade})


def matrix_to_2form(matrix: Sequence[Sequence[Any]]) -> Multivector:
    """Σ_{i,j} M_ij e_i ∧ e_j; the coefficient of e{i,j} (i<j) is M_ij - M_ji."""
    rows = len(matrix)
    for row in matrix:
        if len(row) != rows:
            raise DimensionMismatchError(
                "matrix_to_2form needs a square matrix", left=rows, right=len(row)
            )
    out: dict[Blade, Any] = {}
    for i in range(rows):
        for j in range(i + 1, rows):
            out[Blade((1 << i) | (1 << j))] = matrix[i][j] - matrix[j][i]
    return Multivector(rows, out)


def _half(value: Any) -> Any:
    if isinstance(value, int):
        return Fraction(value, 2)
    if hasattr(value, "quo_ground"):
        # sparse polynomial over QQ
        return value.quo_ground(value.ring.domain.convert(2))
    return value / 2


@dataclass(frozen=True)
class AntisymMatrix2Form:
    """A 2-form as an antisymmetric n×n matrix in the doubled convention.

    ``b = Σ_{j,k} M_jk e_j ∧ e_k`` over all ordered pairs, so the ordered
    blade coefficient is c_jk = 2·M_jk for j < k.

    Example:
        >>> m = AntisymMatrix2Form.from_multivector(Multivector.basis(3, 1, 2))
        >>> m.entries[0][1], m.entries[1][0]
        (Fraction(1, 2), Fraction(-1, 2))
    """

    dimension: int
    entries: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        n = self.dimension
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise DimensionMismatchError(
                "antisymmetric matrix must be n×n", left=n, right=len(self.entries)
            )
        for j in range(n):
            for k in range(j, n):
                a, b = self.entries[j][k], self.entries[k][j]
                if isinstance(a, float) or isinstance(b, float):
                    ok = abs(a + b) <= FLOAT_UNIT_TOLERANCE * max(1.0, abs(a), abs(b))
                else:
                    ok = a == -b
                if not ok:
                    raise GradeError(
                        f"matrix is not antisymmetric at ({j + 1},{k + 1})",
                        expected="antisymmetric",
                        actual=2,
                    )

    @classmethod
    def from_multivector(cls, b: Multivector, zero: Any = 0) -> "AntisymMatrix2Form":
        """Convert a grade-2 multivector; ``zero`` is the ring's zero element."""
        grades = b.grades()
        if grades and grades != {2}:
            raise GradeError("expected a 2-form", expected=2, actual=sorted(grades))
        n = b.dimension
        rows = [[zero for _ in range(n)] for _ in range(n)]
        for blade, value in b.coeffs.items():
            j, k = (i - 1 for i in blade.indices)
            half = _half(value)
            rows[j][k] = half
            rows[k][j] = -half
        return cls(n, tuple(tuple(row) for row in rows))

    def to_multivector(self) -> Multivector:
        n = self.dimension
        return Multivector(
            n,
            {
                Blade((1 << j) | (1 << k)): 2 * self.entries[j][k]
                for j in range(n)
                for k in range(j + 1, n)
            },
        )

    def difference_transpose(self) -> tuple[tuple[Any, ...], ...]:
        """The matrix b - bᵀ (equal to 2b, the ordered coefficient matrix)."""
        n = self.dimension
        return tuple(
            tuple(self.entries[j][k] - self.entries[k][j] for k in range(n)) for j in range(n)
        )


__all__ = [
    "AntisymMatrix2Form",
    "Multivector",
    "contract",
    "grade_project",
    "matrix_to_2form",
    "normal_split",
    "wedge",
]
