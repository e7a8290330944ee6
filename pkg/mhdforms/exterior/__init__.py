"""Pointwise exterior algebra of Λ(Rⁿ): blades, wedge, contraction, splitting."""

from mhdforms.exterior.blades import (
    Blade,
    blade_positions,
    blades_of_grade,
    interior_sign,
    wedge_sign,
)
from mhdforms.exterior.multivector import (
    AntisymMatrix2Form,
    Multivector,
    contract,
    grade_project,
    matrix_to_2form,
    normal_split,
    wedge,
)
from mhdforms.exterior.tables import clear_caches, contraction_table, wedge_table

__all__ = [
    "AntisymMatrix2Form",
    "Blade",
    "Multivector",
    "blade_positions",
    "blades_of_grade",
    "clear_caches",
    "contract",
    "contraction_table",
    "grade_project",
    "interior_sign",
    "matrix_to_2form",
    "normal_split",
    "wedge",
    "wedge_sign",
    "wedge_table",
]
