"""Differential forms with exact polynomial coefficients.

Coefficients live in a sympy sparse polynomial ring over QQ. Two coefficient
algebras are provided:

- :class:`PolynomialAlgebra`: Q[x1..xn] with the ordinary partials.
- :class:`TrigPolynomialAlgebra`: Q[c1..cn, s1..sn] standing for
  cos(x_i), sin(x_i) on the 2π-periodic torus, with ∂_i c_i = -s_i and
  ∂_i s_i = c_i. Used to compare symbolic and spectral derivatives on
  periodic fields.

Example:
    >>> algebra = polynomial_algebra(3)
    >>> x1, x2, x3 = algebra.gens
    >>> w = PolyForm.from_components(algebra, 1, {(2,): x1})
    >>> print(d_sym(w))
    (1)*e{1,2}
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Any, Mapping

import numpy as np
from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from mhdforms.exceptions import DimensionMismatchError, GradeError, IndexRangeError
from mhdforms.exterior.blades import Blade, blades_of_grade
from mhdforms.exterior.multivector import Multivector, contract, wedge

PolyScalar = PolyElement

MAX_NUMERATOR = 9
MAX_DENOMINATOR = 9
MAX_TERMS = 3


class PolynomialAlgebra:
    """Exact coefficients Q[x1..xn] with ordinary partial derivatives."""

    kind = "polynomial"

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.ring, *gens = ring(",".join(f"x{i}" for i in range(1, dimension + 1)), QQ)
        self.gens: tuple[PolyElement, ...] = tuple(gens)

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def constant(self, numerator: int, denominator: int = 1) -> PolyElement:
        return self.ring.ground_new(QQ(numerator, denominator))

    def partial(self, p: PolyElement, axis: int) -> PolyElement:
        """∂p/∂x_axis (1-based axis)."""
        return p.diff(self.gens[axis - 1])

    def monomials(self, degree: int) -> tuple[tuple[int, ...], ...]:
        return _monomials(len(self.gens), degree)

    def monomial(self, exponents: tuple[int, ...]) -> PolyElement:
        return self.ring.from_dict({exponents: QQ(1)})

    def evaluate(self, p: PolyElement, points: tuple[np.ndarray, ...]) -> np.ndarray:
        """Evaluate on coordinate arrays (one per axis)."""
        return _evaluate_terms(p, points, np.zeros_like(points[0], dtype=float))


class TrigPolynomialAlgebra(PolynomialAlgebra):
    """Polynomials in c_i = cos(x_i), s_i = sin(x_i) on the 2π-periodic torus."""

    kind = "trigonometric"

    def __init__(self, dimension: int):
        self.dimension = dimension
        names = [f"c{i}" for i in range(1, dimension + 1)] + [
            f"s{i}" for i in range(1, dimension + 1)
        ]
        self.ring, *gens = ring(",".join(names), QQ)
        self.gens = tuple(gens)

    def cos(self, axis: int) -> PolyElement:
        return self.gens[axis - 1]

    def sin(self, axis: int) -> PolyElement:
        return self.gens[self.dimension + axis - 1]

    def partial(self, p: PolyElement, axis: int) -> PolyElement:
        c, s = self.cos(axis), self.sin(axis)
        return p.diff(s) * c - p.diff(c) * s

    def evaluate(self, p: PolyElement, points: tuple[np.ndarray, ...]) -> np.ndarray:
        values = tuple(np.cos(x) for x in points) + tuple(np.sin(x) for x in points)
        return _evaluate_terms(p, values, np.zeros_like(points[0], dtype=float))


def _evaluate_terms(
    p: PolyElement, values: tuple[np.ndarray, ...], out: np.ndarray
) -> np.ndarray:
    for exponents, coeff in p.terms():
        term = np.full_like(out, float(coeff))
        for value, power in zip(values, exponents):
            if power:
                term = term * value**power
        out = out + term
    return out


@lru_cache(maxsize=None)
def _monomials(variables: int, degree: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        exps for exps in product(range(degree + 1), repeat=variables) if sum(exps) <= degree
    )


@lru_cache(maxsize=None)
def polynomial_algebra(dimension: int) -> PolynomialAlgebra:
    return PolynomialAlgebra(dimension)


@lru_cache(maxsize=None)
def trig_algebra(dimension: int) -> TrigPolynomialAlgebra:
    return TrigPolynomialAlgebra(dimension)


@dataclass(frozen=True, eq=False)
class PolyForm:
    """A grade-ℓ differential form with exact polynomial coefficients."""

    algebra: PolynomialAlgebra
    grade: int
    terms: Multivector

    def __post_init__(self) -> None:
        if self.grade < 0 or self.grade > self.algebra.dimension:
            raise IndexRangeError(
                f"grade {self.grade} outside 0..{self.dimension}",
                value=self.grade,
                dimension=self.dimension,
            )
        grades = self.terms.grades()
        if grades and grades != {self.grade}:
            raise GradeError(
                f"coefficients of a grade-{self.grade} form must sit on grade-{self.grade} blades",
                expected=self.grade,
                actual=sorted(grades),
            )

    @property
    def dimension(self) -> int:
        return self.algebra.dimension

    @classmethod
    def zero(cls, algebra: PolynomialAlgebra, grade: int) -> "PolyForm":
        return cls(algebra, grade, Multivector.zero(algebra.dimension))

    @classmethod
    def from_components(
        cls,
        algebra: PolynomialAlgebra,
        grade: int,
        components: Mapping[tuple[int, ...], PolyElement | int],
    ) -> "PolyForm":
        """Build from index tuples to coefficients; ints are lifted into the ring."""
        lifted = {k: algebra.ring(v) if isinstance(v, int) else v for k, v in components.items()}
        return cls(algebra, grade, Multivector.from_terms(algebra.dimension, lifted))

    def component(self, blade: Blade | tuple[int, ...]) -> PolyElement:
        value = self.terms.coefficient(blade)
        return value if value else self.algebra.zero

    def components(self) -> list[PolyElement]:
        """Coefficients in canonical blade order."""
        return [self.component(b) for b in blades_of_grade(self.dimension, self.grade)]

    def is_zero(self) -> bool:
        return self.terms.is_zero()

    def term_count(self) -> int:
        return self.terms.term_count()

    def _check(self, other: "PolyForm") -> None:
        if other.algebra is not self.algebra:
            raise DimensionMismatchError(
                "forms over different coefficient algebras",
                left=self.dimension,
                right=other.dimension,
            )
        if other.grade != self.grade:
            raise GradeError("sum of forms of different grade", expected=self.grade, actual=other.grade)

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        return PolyForm(self.algebra, self.grade, self.terms + other.terms)

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        return PolyForm(self.algebra, self.grade, self.terms - other.terms)

    def __neg__(self) -> "PolyForm":
        return PolyForm(self.algebra, self.grade, -self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.grade == other.grade
            and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return str(self.terms)


def _partial_form(w: PolyForm, axis: int) -> Multivector:
    return w.terms.map_coefficients(lambda p: w.algebra.partial(p, axis))


def _basis_vector(algebra: PolynomialAlgebra, axis: int) -> Multivector:
    return Multivector.basis(algebra.dimension, axis, coefficient=algebra.one)


def d_sym(w: PolyForm) -> PolyForm:
    """Exterior derivative d = Σ ∂_i e_i ∧ (zero on top-grade forms)."""
    n = w.dimension
    if w.grade >= n:
        return PolyForm.zero(w.algebra, n)
    out = Multivector.zero(n)
    for axis in range(1, n + 1):
        out = out + wedge(_basis_vector(w.algebra, axis), _partial_form(w, axis))
    return PolyForm(w.algebra, w.grade + 1, out)


def delta_sym(w: PolyForm) -> PolyForm:
    """Coderivative δ = -Σ ∂_i e_i ⌟ (zero on 0-forms)."""
    n = w.dimension
    if w.grade == 0:
        return PolyForm.zero(w.algebra, 0)
    out = Multivector.zero(n)
    for axis in range(1, n + 1):
        out = out - contract(_basis_vector(w.algebra, axis), _partial_form(w, axis))
    return PolyForm(w.algebra, w.grade - 1, out)


def wedge_sym(a: PolyForm, b: PolyForm) -> PolyForm:
    """Pointwise exterior product of polynomial forms."""
    if a.algebra is not b.algebra:
        raise DimensionMismatchError(
            "forms over different coefficient algebras", left=a.dimension, right=b.dimension
        )
    grade = a.grade + b.grade
    if grade > a.dimension:
        return PolyForm.zero(a.algebra, a.dimension)
    return PolyForm(a.algebra, grade, wedge(a.terms, b.terms))


def contract_sym(x: PolyForm, w: PolyForm) -> PolyForm:
    """Pointwise interior product x ⌟ w by a polynomial 1-form x."""
    if x.grade != 1:
        raise GradeError("contraction needs a 1-form on the left", expected=1, actual=x.grade)
    if x.algebra is not w.algebra:
        raise DimensionMismatchError(
            "forms over different coefficient algebras", left=x.dimension, right=w.dimension
        )
    if w.grade == 0:
        return PolyForm.zero(w.algebra, 0)
    return PolyForm(w.algebra, w.grade - 1, contract(x.terms, w.terms))


@dataclass(frozen=True)
class PolyJacobian:
    """The matrix (∂_i u_j) of a polynomial 1-form; entries are 0-based."""

    entries: tuple[tuple[PolyElement, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def transpose(self) -> "PolyJacobian":
        n = self.dimension
        return PolyJacobian(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    def __add__(self, other: "PolyJacobian") -> "PolyJacobian":
        n = self.dimension
        return PolyJacobian(
            tuple(
                tuple(self.entries[i][j] + other.entries[i][j] for j in range(n))
                for i in range(n)
            )
        )

    def matmul(self, other: tuple[tuple[Any, ...], ...]) -> tuple[tuple[Any, ...], ...]:
        """Matrix product with another n×n table of ring elements."""
        n = self.dimension
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                total = self.entries[i][0] * other[0][j]
                for k in range(1, n):
                    total = total + self.entries[i][k] * other[k][j]
                row.append(total)
            rows.append(tuple(row))
        return tuple(rows)

    def trace(self) -> PolyElement:
        total = self.entries[0][0]
        for i in range(1, self.dimension):
            total = total + self.entries[i][i]
        return total


def grad_matrix(u: PolyForm) -> PolyJacobian:
    """Jacobian (∂_i u_j) of a polynomial 1-form."""
    if u.grade != 1:
        raise GradeError("grad_matrix needs a 1-form", expected=1, actual=u.grade)
    n = u.dimension
    components = u.components()
    return PolyJacobian(
        tuple(
            tuple(u.algebra.partial(components[j], i + 1) for j in range(n)) for i in range(n)
        )
    )


def random_polyscalar(
    algebra: PolynomialAlgebra, degree: int, rng: np.random.Generator
) -> PolyElement:
    """Up to three terms p/q·x^α with |p| ≤ 9, 1 ≤ q ≤ 9, |α| ≤ degree."""
    monomials = algebra.monomials(degree)
    value = algebra.zero
    for _ in range(int(rng.integers(0, MAX_TERMS + 1))):
        exponents = monomials[int(rng.integers(len(monomials)))]
        numerator = int(rng.integers(-MAX_NUMERATOR, MAX_NUMERATOR + 1))
        denominator = int(rng.integers(1, MAX_DENOMINATOR + 1))
        value = value + algebra.monomial(exponents) * algebra.constant(numerator, denominator)
    return value


def random_polyform(
    algebra: PolynomialAlgebra, grade: int, degree: int, rng: np.random.Generator
) -> PolyForm:
    """Random grade-ℓ form with :func:`random_polyscalar` coefficients."""
    coeffs = {
        blade: random_polyscalar(algebra, degree, rng)
        for blade in blades_of_grade(algebra.dimension, grade)
    }
    return PolyForm(algebra, grade, Multivector(algebra.dimension, coeffs))


__all__ = [
    "PolyForm",
    "PolyJacobian",
    "PolyScalar",
    "PolynomialAlgebra",
    "TrigPolynomialAlgebra",
    "contract_sym",
    "d_sym",
    "delta_sym",
    "grad_matrix",
    "polynomial_algebra",
    "random_polyform",
    "random_polyscalar",
    "trig_algebra",
    "wedge_sym",
]
