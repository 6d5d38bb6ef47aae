"""Entanglement of the emitted pair, pure and thermally seeded.

All quantities are in nats. The squeezed thermal state is represented by
the pair (n_bar, z); no covariance matrix is built.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .squeezing import check_squeezing_ratio


@dataclass(frozen=True)
class ThermalContext:
    """Mean thermal occupancy of each initial mode."""

    n_bar: float = 0.0

    def __post_init__(self):
        if not self.n_bar >= 0.0:
            raise ValueError(f"n_bar must be >= 0, got {self.n_bar!r}")


def entanglement_entropy(mean_pairs: float) -> float:
    """Von Neumann entropy of one beam of a pure two-mode squeezed vacuum.

    (1 + N) ln(1 + N) - N ln N, extended continuously to 0 at N = 0.
    Only valid for the pure state; thermal inputs go through log_negativity.
    """
    if not mean_pairs >= 0.0:
        raise ValueError(f"mean_pairs must be >= 0, got {mean_pairs!r}")
    if mean_pairs == 0.0:
        return 0.0
    if math.isinf(mean_pairs):
        return math.inf
    n = mean_pairs
    return (1.0 + n) * math.log1p(n) - n * math.log(n)


def symplectic_eigenvalue(ctx: ThermalContext, z: float) -> float:
    """Smallest symplectic eigenvalue of the partially transposed squeezed thermal state."""
    az = check_squeezing_ratio(z)
    return (2.0 * ctx.n_bar + 1.0) * (1.0 - az) / (1.0 + az)


def log_negativity(ctx: ThermalContext, z: float) -> float:
    """max(0, -ln mu); exactly zero from the critical occupancy upwards."""
    mu = symplectic_eigenvalue(ctx, z)
    if ctx.n_bar >= critical_occupancy(z):
        return 0.0
    return max(0.0, -math.log(mu))


def critical_occupancy(z: float) -> float:
    """Thermal occupancy at and above which the log-negativity vanishes."""
    az = check_squeezing_ratio(z)
    return az / (1.0 - az)
