"""Singular convolution kernels and the exact Duhamel weights.

The bilinear bounds rest on

    ∫₀ᵗ (t-s)^{-a} s^{-b} ds = t^{1-a-b} B(1-a, 1-b),   a, b < 1,

with the three instances B(1/2, 1/4), B(1/4, 1/4) and B(3/4, 1/4). The
product quadrature used by the solver holds the source at the right end of
each mesh interval and integrates the kernel factor exactly; the same rule
applied to (t-s)^{-a} gives the discrete counterparts of these constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.special

from mhdforms.exceptions import MeshError
from mhdforms.solver.mesh import TimeMesh

# (a, b) of the three bilinear kernels keyed by the Beta arguments they produce
BILINEAR_KERNELS: dict[str, tuple[float, float]] = {
    "B(1/2,1/4)": (0.5, 0.75),
    "B(1/4,1/4)": (0.75, 0.75),
    "B(3/4,1/4)": (0.25, 0.75),
}


def singular_integral(t: float, a: float, b: float) -> float:
    """∫₀ᵗ (t-s)^{-a} s^{-b} ds in closed form."""
    if a >= 1 or b >= 1:
        raise MeshError(f"kernel exponents must be < 1, got a={a}, b={b}", time=t)
    if t <= 0:
        return 0.0
    return float(t ** (1 - a - b) * scipy.special.beta(1 - a, 1 - b))


def kernel_constants() -> dict[str, float]:
    return {name: float(scipy.special.beta(1 - a, 1 - b)) for name, (a, b) in BILINEAR_KERNELS.items()}


def product_quadrature_integral(mesh: TimeMesh, a: float, b: float) -> float:
    """Product rule for ∫₀ᵀ (T-s)^{-a} s^{-b} ds on ``mesh``.

    s^{-b} is held at the right node of each interval and (T-s)^{-a} is
    integrated exactly.
    """
    if a >= 1 or b >= 1:
        raise MeshError(f"kernel exponents must be < 1, got a={a}, b={b}", time=mesh.horizon)
    t = mesh.times
    horizon = mesh.horizon
    left = (horizon - t[:-1]) ** (1 - a)
    right = (horizon - t[1:]) ** (1 - a)
    return float(np.sum((left - right) / (1 - a) * t[1:] ** (-b)))


def product_quadrature_constants(mesh: TimeMesh) -> dict[str, float]:
    """Discrete Beta constants: product rule divided by T^{1-a-b}."""
    horizon = mesh.horizon
    return {
        name: product_quadrature_integral(mesh, a, b) / horizon ** (1 - a - b)
        for name, (a, b) in BILINEAR_KERNELS.items()
    }


def weighted_exponential_integral(rate: np.ndarray, x: float, beta: float) -> np.ndarray:
    """Φ(x) = ∫₀ˣ e^{-λ(x-s)} s^{-β} ds = x^{1-β} ₁F₁(1; 2-β; -λx) / (1-β)."""
    if x <= 0:
        return np.zeros_like(rate, dtype=float)
    return x ** (1 - beta) * scipy.special.hyp1f1(1.0, 2.0 - beta, -rate * x) / (1 - beta)


@dataclass
class DuhamelWeights:
    """Per-interval propagation factors and source weights on one mesh.

    For interval m = 1..M of length h_m the recursion

        I_m = e^{-λ h_m} I_{m-1} + w_m(λ) G(t_m)

    integrates ∫₀^{t_m} e^{-λ(t_m-s)} G(s) ds with G held at t_m. For β > 0
    the source is modelled as (s/t_m)^{-β} G(t_m) and the weight integrates
    that power exactly.

    Attributes:
        rate: |k|² per stored frequency
        mesh: The time mesh
        beta: Exponent of the modelled source singularity
    """

    rate: np.ndarray
    mesh: TimeMesh
    beta: float = 0.0
    _cache: dict[int, tuple[np.ndarray, np.ndarray]] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.beta < 1:
            raise MeshError(f"singular weight must lie in [0, 1), got {self.beta}")

    @cached_property
    def _unique(self) -> tuple[np.ndarray, np.ndarray]:
        values, inverse = np.unique(self.rate, return_inverse=True)
        return values, inverse.reshape(self.rate.shape)

    def factors(self, m: int) -> tuple[np.ndarray, np.ndarray]:
        """(decay, weight) arrays for interval m (1-based)."""
        if not 1 <= m <= self.mesh.nodes:
            raise MeshError(f"interval {m} outside 1..{self.mesh.nodes}", nodes=self.mesh.nodes)
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        left, right = float(self.mesh.times[m - 1]), float(self.mesh.times[m])
        h = right - left
        decay = np.exp(-self.rate * h)
        if self.beta == 0.0:
            safe = np.where(self.rate > 0, self.rate, 1.0)
            weight = np.where(self.rate > 0, -np.expm1(-self.rate * h) / safe, h)
        else:
            values, inverse = self._unique
            unique_weight = weighted_exponential_integral(values, right, self.beta)
            unique_weight = unique_weight - np.exp(-values * h) * weighted_exponential_integral(
                values, left, self.beta
            )
            weight = right**self.beta * unique_weight[inverse]
        self._cache[m] = (decay, weight)
        return decay, weight


__all__ = [
    "BILINEAR_KERNELS",
    "DuhamelWeights",
    "kernel_constants",
    "product_quadrature_constants",
    "product_quadrature_integral",
    "singular_integral",
    "weighted_exponential_integral",
]
