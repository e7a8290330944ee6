"""Structure-constant tables for wedge and contraction between graded components.

The spectral back end works on dense arrays indexed by blade position, so
products are applied as short loops over these cached tables. Signs are
looked up through :mod:`mhdforms.exterior.blades` at build time; call
:func:`clear_caches` after replacing a sign rule.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from mhdforms.exceptions import IndexRangeError
from mhdforms.exterior import blades as _blades


class WedgeEntry(NamedTuple):
    left: int
    right: int
    target: int
    sign: int


class ContractionEntry(NamedTuple):
    axis: int
    source: int
    target: int
    sign: int


@lru_cache(maxsize=None)
def wedge_table(dimension: int, left_grade: int, right_grade: int) -> tuple[WedgeEntry, ...]:
    """Non-zero products e_A ∧ e_B for |A| = left_grade, |B| = right_grade.

    Entries hold positions into :func:`blades_of_grade` lists.
    """
    target_grade = left_grade + right_grade
    if target_grade > dimension:
        return ()
    left_blades = _blades.blades_of_grade(dimension, left_grade)
    right_blades = _blades.blades_of_grade(dimension, right_grade)
    positions = _blades.blade_positions(dimension, target_grade)
    entries = []
    for i, left in enumerate(left_blades):
        for j, right in enumerate(right_blades):
            sign = _blades.wedge_sign(left.mask, right.mask)
            if sign:
                entries.append(WedgeEntry(i, j, positions[left.mask | right.mask], sign))
    return tuple(entries)


@lru_cache(maxsize=None)
def contraction_table(dimension: int, grade: int) -> tuple[ContractionEntry, ...]:
    """Non-zero contractions e_axis ⌟ e_J for |J| = grade (axis is 0-based)."""
    if grade < 1:
        return ()
    if grade > dimension:
        raise IndexRangeError(
            f"grade {grade} outside 0..{dimension}", value=grade, dimension=dimension
        )
    sources = _blades.blades_of_grade(dimension, grade)
    positions = _blades.blade_positions(dimension, grade - 1)
    entries = []
    for j, blade in enumerate(sources):
        for index in blade.indices:
            sign = _blades.interior_sign(index, blade.mask)
            entries.append(
                ContractionEntry(index - 1, j, positions[blade.mask ^ (1 << (index - 1))], sign)
            )
    return tuple(entries)


def clear_caches() -> None:
    """Drop cached tables so they are rebuilt from the current sign rules."""
    wedge_table.cache_clear()
    contraction_table.cache_clear()


__all__ = [
    "ContractionEntry",
    "WedgeEntry",
    "clear_caches",
    "contraction_table",
    "wedge_table",
]
