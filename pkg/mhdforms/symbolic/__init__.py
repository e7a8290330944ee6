"""Differential forms with exact polynomial coefficients and identity suites."""

from mhdforms.symbolic.magic import magic_lhs, magic_rhs, strain_term
from mhdforms.symbolic.polyforms import (
    PolyForm,
    PolyJacobian,
    PolynomialAlgebra,
    PolyScalar,
    TrigPolynomialAlgebra,
    contract_sym,
    d_sym,
    delta_sym,
    grad_matrix,
    polynomial_algebra,
    random_polyform,
    trig_algebra,
    wedge_sym,
)
from mhdforms.symbolic.suites import (
    IdentityReport,
    check_complex,
    check_dictionary,
    check_leibniz,
    verify_magic,
)

__all__ = [
    "IdentityReport",
    "PolyForm",
    "PolyJacobian",
    "PolyScalar",
    "PolynomialAlgebra",
    "TrigPolynomialAlgebra",
    "check_complex",
    "check_dictionary",
    "check_leibniz",
    "contract_sym",
    "d_sym",
    "delta_sym",
    "grad_matrix",
    "magic_lhs",
    "magic_rhs",
    "polynomial_algebra",
    "random_polyform",
    "strain_term",
    "trig_algebra",
    "verify_magic",
    "wedge_sym",
]
