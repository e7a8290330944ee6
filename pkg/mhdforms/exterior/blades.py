"""Basis blades of the exterior algebra Λ(Rⁿ) encoded as bitmasks.

Index ``i`` (1-based) is bit ``i - 1`` of the mask, so e{1,3} is ``0b101``.
All sign rules reduce to popcounts over masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from mhdforms.exceptions import IndexRangeError

MAX_DIMENSION = 64


@dataclass(frozen=True)
class Blade:
    """A basis blade e_J = e_{j1} ∧ ... ∧ e_{jℓ} with j1 < ... < jℓ.

    The empty blade (mask 0) is the scalar unit of Λ⁰.

    Example:
        >>> Blade.from_indices([1, 2])
        Blade(mask=3)
        >>> str(Blade(0b101))
        'e{1,3}'
    """

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask.bit_length() > MAX_DIMENSION:
            raise IndexRangeError(
                f"blade mask {self.mask} outside the supported range",
                value=self.mask,
                dimension=MAX_DIMENSION,
            )

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Blade":
        """Build a blade from strictly increasing 1-based indices."""
        indices = tuple(indices)
        mask = 0
        previous = 0
        for index in indices:
            if index <= previous:
                raise IndexRangeError(
                    "blade indices must be positive and strictly increasing",
                    value=indices,
                    dimension=MAX_DIMENSION,
                )
            mask |= 1 << (index - 1)
            previous = index
        return cls(mask)

    @property
    def indices(self) -> tuple[int, ...]:
        return mask_indices(self.mask)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def top_index(self) -> int:
        """Largest index in the blade (0 for the scalar blade)."""
        return self.mask.bit_length()

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.grade, self.indices)

    def __str__(self) -> str:
        if self.mask == 0:
            return "1"
        if self.grade == 1:
            return f"e{self.indices[0]}"
        return "e{" + ",".join(str(i) for i in self.indices) + "}"


def mask_indices(mask: int) -> tuple[int, ...]:
    """Return the 1-based indices set in ``mask`` in increasing order."""
    indices = []
    position = 1
    while mask:
        if mask & 1:
            indices.append(position)
        mask >>= 1
        position += 1
    return tuple(indices)


def wedge_sign(left: int, right: int) -> int:
    """Sign of e_left ∧ e_right relative to e_(left|right); 0 on overlap.

    Counts the transpositions needed to merge the two increasing index
    lists.
    """
    if left & right:
        return 0
    swaps = 0
    left >>= 1
    while left:
        swaps += (left & right).bit_count()
        left >>= 1
    return -1 if swaps & 1 else 1


def interior_sign(index: int, mask: int) -> int:
    """Sign of e_index ⌟ e_mask for ``index`` contained in ``mask``.

    Equals (-1)^(k-1) when ``index`` sits in slot k of the blade.
    """
    below = mask & ((1 << (index - 1)) - 1)
    return -1 if below.bit_count() & 1 else 1


@lru_cache(maxsize=None)
def blades_of_grade(dimension: int, grade: int) -> tuple[Blade, ...]:
    """All grade-ℓ blades of Λ(Rⁿ) in lexicographic index order.

    This is the canonical component order of every field array.
    """
    check_dimension(dimension)
    if grade < 0 or grade > dimension:
        raise IndexRangeError(
            f"grade {grade} outside 0..{dimension}", value=grade, dimension=dimension
        )
    return tuple(
        Blade.from_indices(combo) for combo in combinations(range(1, dimension + 1), grade)
    )


@lru_cache(maxsize=None)
def blade_positions(dimension: int, grade: int) -> dict[int, int]:
    """Map blade mask to its position in :func:`blades_of_grade`."""
    return {blade.mask: pos for pos, blade in enumerate(blades_of_grade(dimension, grade))}


def check_dimension(dimension: int) -> None:
    if dimension < 1 or dimension > MAX_DIMENSION:
        raise IndexRangeError(
            f"dimension must lie in 1..{MAX_DIMENSION}", value=dimension, dimension=dimension
        )


__all__ = [
    "MAX_DIMENSION",
    "Blade",
    "blade_positions",
    "blades_of_grade",
    "check_dimension",
    "interior_sign",
    "mask_indices",
    "wedge_sign",
]
