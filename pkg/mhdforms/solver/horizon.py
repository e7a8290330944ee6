"""Horizon search: shrink T until the linear evolution of the data is small.

The norm of (S(t)u0, M(t)b0) over (0, T] is measured on one fixed
reference set R = mesh(T0) ∪ {T0 2^{-k}}. Every candidate T uses the
points of R in (0, T], so the measured norm is non-increasing in T.
"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, Field

from mhdforms.exceptions import HorizonUnderflowError
from mhdforms.observability import get_logger
from mhdforms.solver.config import SolverConfig
from mhdforms.solver.norms import node_terms
from mhdforms.solver.picard import prepare_initial_data
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.operators import heat_semigroup

logger = get_logger(__name__)


class HorizonSearch(BaseModel):
    """Horizons tried by the search with their measured data norms."""

    target: float = Field(..., gt=0.0)
    horizons: list[float] = Field(default_factory=list)
    norms: list[float] = Field(default_factory=list)

    @property
    def horizon(self) -> float:
        return self.horizons[-1]


def _reference_times(config: SolverConfig) -> tuple[np.ndarray, list[float]]:
    start = config.horizon
    halvings = [start * 0.5**k for k in range(config.max_halvings + 1)]
    halvings = [t for t in halvings if t >= config.min_horizon] or [start]
    times = np.unique(np.concatenate([config.mesh.times[1:], halvings]))
    return times, halvings


def initial_data_norms(
    u0: SpectralFormField,
    b0: SpectralFormField,
    config: SolverConfig,
    horizons: list[float] | None = None,
) -> list[float]:
    """Measured norm of (S(t)u0, M(t)b0) on (0, T] for each T in ``horizons``.

    ``horizons`` defaults to config.horizon, config.horizon / 2, ...
    """
    u0, b0 = prepare_initial_data(u0, b0, config.dealias_fraction)
    times, halvings = _reference_times(config)
    if horizons is None:
        horizons = halvings
    times = np.unique(np.concatenate([times, horizons]))
    terms = np.array(
        [node_terms(float(t), heat_semigroup(float(t), u0), heat_semigroup(float(t), b0)) for t in times]
    )
    norms = []
    for horizon in horizons:
        inside = times <= horizon * (1 + 1e-12)
        norms.append(float(np.sum(np.max(terms[inside], axis=0))) if np.any(inside) else 0.0)
    return norms


def local_T_search(
    u0: SpectralFormField,
    b0: SpectralFormField,
    epsilon: float,
    config: SolverConfig,
) -> HorizonSearch:
    """Halve T from config.horizon until the measured data norm is at most ``epsilon``.

    Raises:
        ValueError: if ``epsilon`` is not positive
        HorizonUnderflowError: if T would drop below ``min_horizon`` or the
            halving cap is exhausted first
    """
    if not epsilon > 0:
        raise ValueError(f"smallness target must be positive, got {epsilon}")
    _, halvings = _reference_times(config)
    norms = initial_data_norms(u0, b0, config, halvings)
    search = HorizonSearch(target=epsilon)
    for horizon, norm in zip(halvings, norms):
        search.horizons.append(horizon)
        search.norms.append(norm)
        logger.debug("horizon_candidate", horizon=horizon, norm=norm, target=epsilon)
        if norm <= epsilon:
            logger.info("horizon_found", horizon=horizon, norm=norm, halvings=len(search.horizons) - 1)
            return search
    logger.error("horizon_underflow", tried=len(search.horizons), last_norm=search.norms[-1])
    raise HorizonUnderflowError(
        f"data norm stays above {epsilon} down to T = {search.horizons[-1]:.3g}",
        horizons=search.horizons,
        norms=search.norms,
        target=epsilon,
    )


__all__ = ["HorizonSearch", "initial_data_norms", "local_T_search"]
