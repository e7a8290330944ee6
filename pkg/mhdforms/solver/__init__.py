"""Mild-solution solver: Duhamel quadrature, bilinear terms, Picard iteration."""

from mhdforms.solver.bilinear import (
    BilinearConstant,
    BilinearResult,
    bilinear_b1,
    bilinear_b2,
    bilinear_b3,
    constant_spread,
    measure_bilinear_constant,
    measure_bilinear_constants,
)
from mhdforms.solver.config import SolverConfig
from mhdforms.solver.duhamel import DuhamelAccumulator, duhamel
from mhdforms.solver.horizon import HorizonSearch, initial_data_norms, local_T_search
from mhdforms.solver.initial_data import FieldSpec, build_initial_data
from mhdforms.solver.kernels import kernel_constants, product_quadrature_constants, singular_integral
from mhdforms.solver.mesh import TimeMesh, graded_mesh
from mhdforms.solver.monitors import ScalingReport, db_monitor, scaling_check
from mhdforms.solver.nonlinear import (
    induction_dual_path,
    nonlin_convection,
    nonlin_induction,
    nonlin_lorentz,
)
from mhdforms.solver.norms import CriticalNorms, critical_norms, trajectory_distance
from mhdforms.solver.picard import IterationLog, IterationRecord, picard_solve
from mhdforms.solver.trajectory import MildTrajectory

__all__ = [
    "BilinearConstant",
    "BilinearResult",
    "CriticalNorms",
    "DuhamelAccumulator",
    "FieldSpec",
    "HorizonSearch",
    "IterationLog",
    "IterationRecord",
    "MildTrajectory",
    "ScalingReport",
    "SolverConfig",
    "TimeMesh",
    "bilinear_b1",
    "bilinear_b2",
    "bilinear_b3",
    "build_initial_data",
    "constant_spread",
    "critical_norms",
    "db_monitor",
    "duhamel",
    "graded_mesh",
    "induction_dual_path",
    "initial_data_norms",
    "kernel_constants",
    "local_T_search",
    "measure_bilinear_constant",
    "measure_bilinear_constants",
    "nonlin_convection",
    "nonlin_induction",
    "nonlin_lorentz",
    "picard_solve",
    "product_quadrature_constants",
    "scaling_check",
    "singular_integral",
    "trajectory_distance",
]
