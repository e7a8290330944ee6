"""mhdforms: exterior-calculus MHD on the periodic torus.

Subpackages:
    - exterior: pointwise exterior algebra (blades, wedge, contraction)
    - symbolic: differential forms with exact polynomial coefficients
    - spectral: form fields on the torus, Hodge projections, semigroups
    - solver: Duhamel integrals, critical norms and the Picard iteration
    - cli: the ``mhdforms`` command line and its CSV reports
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
