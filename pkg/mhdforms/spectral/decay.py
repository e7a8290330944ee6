"""Probe-ratio diagnostics for the p→q smoothing of the heat-type semigroups.

For a probe f and exponents with 1/q = 1/p - α/n the report records, on a
time grid,

    t^{α/2} ‖S(t)f‖_q / ‖f‖_p          (value ratio)
    t^{(1+α)/2} ‖D S(t)f‖_q / ‖f‖_p    (derivative ratio)

where D is the full gradient for heat and Stokes and δ for Maxwell. These
are measurements on one probe, not operator norms.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field

from mhdforms.exceptions import ExponentRelationError, MeshError
from mhdforms.observability import get_logger
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.norms import lp_norm, lp_norm_of_magnitude, pointwise_magnitude
from mhdforms.spectral.operators import Semigroup, delta_spec, gradient_components

logger = get_logger(__name__)

EXPONENT_TOLERANCE = 1e-12


class DecayReport(BaseModel):
    """Ratio curves of one semigroup on one probe for one exponent triple."""

    semigroup: str = Field(..., description="heat, stokes or maxwell")
    p: float = Field(..., ge=1.0, description="Source integrability")
    q: float = Field(..., ge=1.0, description="Target integrability")
    alpha: float = Field(..., ge=0.0, description="Smoothing exponent")
    times: list[float] = Field(default_factory=list, description="Strictly increasing positive times")
    ratios: list[float] = Field(default_factory=list, description="t^{α/2}‖S(t)f‖_q/‖f‖_p")
    derivative_ratios: list[float] = Field(
        default_factory=list, description="t^{(1+α)/2}‖D S(t)f‖_q/‖f‖_p"
    )

    @property
    def sup_ratio(self) -> float:
        return max(self.ratios, default=0.0)

    @property
    def sup_derivative_ratio(self) -> float:
        return max(self.derivative_ratios, default=0.0)


def check_exponents(p: float, q: float, alpha: float, dimension: int) -> None:
    """Require 1/q = 1/p - α/n and 0 ≤ α ≤ min(1, n/p).

    Raises:
        ExponentRelationError: if either condition fails
    """
    if p < 1 or q < 1:
        raise ExponentRelationError(
            "integrability exponents must be >= 1", p=p, q=q, alpha=alpha, dimension=dimension
        )
    inverse_q = 0.0 if math.isinf(q) else 1.0 / q
    inverse_p = 0.0 if math.isinf(p) else 1.0 / p
    if abs(inverse_q - (inverse_p - alpha / dimension)) > EXPONENT_TOLERANCE:
        raise ExponentRelationError(
            f"1/q = 1/p - α/n fails for p={p}, q={q}, α={alpha}, n={dimension}",
            p=p,
            q=q,
            alpha=alpha,
            dimension=dimension,
        )
    upper = min(1.0, dimension * inverse_p)
    if alpha < 0 or alpha > upper + EXPONENT_TOLERANCE:
        raise ExponentRelationError(
            f"α={alpha} outside [0, {upper}]", p=p, q=q, alpha=alpha, dimension=dimension
        )


def parse_exponent(value: float | int | str, dimension: int) -> float:
    """Read an integrability exponent such as 3, "inf", "n", "2n" or "2n/3".

    Raises:
        ExponentRelationError: for text that is not an exponent
    """
    if isinstance(value, (int, float)):
        return float(value)
    text = value.strip().lower().replace(" ", "")
    if text in {"inf", "infinity", "∞"}:
        return math.inf
    numerator, _, denominator = text.partition("/")
    try:
        if numerator.endswith("n"):
            factor = numerator[:-1]
            result = (float(factor) if factor else 1.0) * dimension
        else:
            result = float(numerator)
        if denominator:
            result /= float(denominator)
    except ValueError:
        raise ExponentRelationError(
            f"cannot read exponent {value!r}", p=math.nan, q=math.nan, alpha=math.nan, dimension=dimension
        ) from None
    return result


def default_decay_times(count: int = 25, start: float = 1e-3, stop: float = 1.0) -> list[float]:
    return [float(t) for t in np.geomspace(start, stop, count)]


def _check_times(times: Sequence[float]) -> None:
    previous = 0.0
    for t in times:
        if not t > previous:
            raise MeshError(
                "decay times must be strictly increasing and positive", time=t, nodes=len(times)
            )
        previous = t


def _derivative_magnitude(semigroup: Semigroup, w: SpectralFormField) -> np.ndarray:
    if semigroup is Semigroup.MAXWELL:
        return pointwise_magnitude(delta_spec(w).to_physical())
    return pointwise_magnitude(gradient_components(w), component_axes=2)


def decay_diagnostic(
    semigroup: Semigroup | str,
    probe: SpectralFormField,
    p: float,
    q: float,
    alpha: float,
    times: Sequence[float],
) -> DecayReport:
    """Measure value and derivative ratio curves of ``semigroup`` on ``probe``.

    The probe is projected first (Leray for Stokes, ℚ for Maxwell) so that
    the semigroup acts on its natural domain.

    Example:
        >>> report = decay_diagnostic("heat", probe, 3.0, 3.0, 0.0, [0.01, 0.1, 1.0])
        >>> report.sup_ratio <= 1.0
        True
    """
    semigroup = Semigroup(semigroup)
    check_exponents(p, q, alpha, probe.dimension)
    _check_times(times)
    f = semigroup.project(probe)
    base = lp_norm(f, p)
    report = DecayReport(semigroup=semigroup.value, p=p, q=q, alpha=alpha)
    if base == 0.0:
        logger.warning("decay_probe_vanishes", semigroup=semigroup.value)
        return report
    for t in times:
        evolved = semigroup.apply(t, f)
        value = lp_norm(evolved, q)
        derivative = lp_norm_of_magnitude(_derivative_magnitude(semigroup, evolved), f.grid, q)
        report.times.append(float(t))
        report.ratios.append(t ** (alpha / 2) * value / base)
        report.derivative_ratios.append(t ** ((1 + alpha) / 2) * derivative / base)
    logger.debug(
        "decay_diagnostic",
        semigroup=semigroup.value,
        p=p,
        q=q,
        alpha=alpha,
        sup_ratio=report.sup_ratio,
        sup_derivative_ratio=report.sup_derivative_ratio,
    )
    return report


__all__ = [
    "DecayReport",
    "check_exponents",
    "decay_diagnostic",
    "default_decay_times",
    "parse_exponent",
]
