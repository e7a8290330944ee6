"""Form fields on the flat periodic torus and their Fourier-multiplier calculus."""

from mhdforms.spectral.decay import (
    DecayReport,
    check_exponents,
    decay_diagnostic,
    default_decay_times,
    parse_exponent,
)
from mhdforms.spectral.field import SpectralFormField, transform_forward, transform_inverse
from mhdforms.spectral.grid import TorusGrid
from mhdforms.spectral.io import load_field, save_field, write_field_csv
from mhdforms.spectral.norms import lp_norm, parseval_l2
from mhdforms.spectral.operators import (
    Semigroup,
    coexact_part,
    d_spec,
    delta_spec,
    exact_part,
    exact_project,
    harmonic_part,
    heat_semigroup,
    hodge_laplacian,
    hodge_parts,
    inner,
    jacobian,
    leray_project,
    maxwell_semigroup,
    stokes_semigroup,
)
from mhdforms.spectral.probes import gaussian_bump_probe, random_field, single_mode
from mhdforms.spectral.products import contract_fields, dealias, wedge_fields

__all__ = [
    "DecayReport",
    "Semigroup",
    "SpectralFormField",
    "TorusGrid",
    "check_exponents",
    "coexact_part",
    "contract_fields",
    "d_spec",
    "dealias",
    "decay_diagnostic",
    "default_decay_times",
    "delta_spec",
    "exact_part",
    "exact_project",
    "gaussian_bump_probe",
    "harmonic_part",
    "heat_semigroup",
    "hodge_laplacian",
    "hodge_parts",
    "inner",
    "jacobian",
    "leray_project",
    "load_field",
    "lp_norm",
    "maxwell_semigroup",
    "parse_exponent",
    "parseval_l2",
    "random_field",
    "save_field",
    "single_mode",
    "stokes_semigroup",
    "transform_forward",
    "transform_inverse",
    "wedge_fields",
    "write_field_csv",
]
