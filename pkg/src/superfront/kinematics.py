"""Double-Doppler scattering of plane waves on a superluminal optical boundary.

Units: c = 1. Wave numbers are in rad per (arbitrary) length and angular
frequencies in the reciprocal unit. ``beta`` is the positive boundary
parameter in (0, 1), substituted literally into every formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import DegenerateFrame, DegenerateGeometry

DEGENERACY_TOL = 1e-14

Branch = Literal["incident", "transmitted", "reflected", "anti-incident"]
BRANCHES: tuple[str, ...] = ("incident", "transmitted", "reflected", "anti-incident")


@dataclass(frozen=True)
class BoundaryConfig:
    """Boundary parameter and the four branch refractive indices."""

    beta: float
    n_i: float
    n_t: float
    n_r: float
    n_a: float

    def __post_init__(self):
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must lie in (0, 1), got {self.beta!r}")
        for name in ("n_i", "n_t", "n_r", "n_a"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ValueError(f"{name} must be > 0, got {value!r}")

    @property
    def gamma(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.beta**2)

    @property
    def gamma2(self) -> float:
        return 1.0 / (1.0 - self.beta**2)


@dataclass(frozen=True)
class WaveMode:
    k_par: float
    k_perp: float
    branch: str
    n: float

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"unknown branch {self.branch!r}")
        if not self.n > 0.0:
            raise ValueError(f"n must be > 0, got {self.n!r}")

    @property
    def magnitude(self) -> float:
        return math.hypot(self.k_par, self.k_perp)

    @property
    def theta(self) -> float:
        # reflected and anti-incident modes carry negated components, so their
        # propagation angle is read off the negated vector.
        sign = 1.0 if self.branch in ("incident", "transmitted") else -1.0
        return math.atan2(abs(self.k_perp), sign * self.k_par)

    @property
    def omega(self) -> float:
        return self.magnitude / self.n

    @classmethod
    def incident(cls, k: float, theta: float, n: float) -> "WaveMode":
        """Incident mode of wave number ``k`` at angle ``theta`` to the boundary velocity."""
        s, c = _sin_cos(theta)
        return cls(k * c, k * s, "incident", n)


@dataclass(frozen=True)
class KinematicAux:
    f: float
    h_i: float
    h_t: float
    h_r: float
    delta_it: float
    delta_ir: float
    g_i: float
    g_t: float
    g_r: float


def _sin_cos(theta: float) -> tuple[float, float]:
    # exact values on the axis keep the axial rule consistent with scatter()
    if theta == 0.0:
        return 0.0, 1.0
    if theta == math.pi:
        return 0.0, -1.0
    return math.sin(theta), math.cos(theta)


def _check_angle(theta: float) -> None:
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"angle must lie in [0, pi], got {theta!r}")


def boosted_index(n: float, theta: float, beta: float) -> float:
    """Refractive index seen in the frame where the boundary is instantaneous.

    Raises DegenerateFrame when ``1 - beta*n*cos(theta)`` vanishes.
    """
    if not n > 0.0:
        raise ValueError(f"n must be > 0, got {n!r}")
    _check_angle(theta)
    if not 0.0 < beta < 1.0:
        raise ValueError(f"beta must lie in (0, 1), got {beta!r}")
    s, c = _sin_cos(theta)
    g2 = 1.0 / (1.0 - beta**2)
    denom = 1.0 - beta * n * c
    if abs(denom) < DEGENERACY_TOL:
        raise DegenerateFrame(f"phase front co-moving with the frame (n={n}, theta={theta}, beta={beta})")
    root = math.sqrt(g2 * (c - beta / n) ** 2 + s * s)
    return abs(n * root / (g2 * denom))


def _h(c: float, s: float, n: float, beta: float, g2: float) -> float:
    return math.sqrt(g2 * (c - beta / n) ** 2 + s * s)


def _g(c: float, n: float, beta: float) -> float:
    return beta * (1.0 - beta * n * c) / n


def kinematic_aux(theta_i: float, cfg: BoundaryConfig) -> KinematicAux:
    _check_angle(theta_i)
    s, c = _sin_cos(theta_i)
    beta, g2 = cfg.beta, cfg.gamma2
    h_i = _h(c, s, cfg.n_i, beta, g2)
    h_t = _h(c, s, cfg.n_t, beta, g2)
    h_r = _h(c, s, cfg.n_r, beta, g2)
    if h_t < DEGENERACY_TOL or h_r < DEGENERACY_TOL:
        raise DegenerateGeometry(f"h_t={h_t!r}, h_r={h_r!r} at theta_i={theta_i!r}")
    return KinematicAux(
        f=c - beta / cfg.n_i,
        h_i=h_i,
        h_t=h_t,
        h_r=h_r,
        delta_it=h_i / h_t,
        delta_ir=h_i / h_r,
        g_i=_g(c, cfg.n_i, beta),
        g_t=_g(c, cfg.n_t, beta),
        g_r=_g(c, cfg.n_r, beta),
    )


def _parallel_factors(theta_i: float, cfg: BoundaryConfig) -> tuple[float, float, float]:
    """Parallel wave-vector components of the t, r and a modes per unit k_i, before sign flips."""
    aux = kinematic_aux(theta_i, cfg)
    g2 = cfg.gamma2
    return (
        g2 * (aux.f + aux.delta_it * aux.g_t),
        g2 * (aux.f - aux.delta_ir * aux.g_r),
        g2 * (aux.f + aux.g_i),
    )


def scatter(incident: WaveMode, cfg: BoundaryConfig) -> tuple[WaveMode, WaveMode, WaveMode]:
    """Map an incident mode to its (transmitted, reflected, anti-incident) partners."""
    if incident.branch != "incident":
        raise ValueError(f"expected an incident mode, got branch {incident.branch!r}")
    k = incident.magnitude
    if not k > 0.0:
        raise ValueError("incident mode must have nonzero wave number")
    theta_i = incident.theta
    s, _ = _sin_cos(theta_i)
    par_t, par_r, par_a = _parallel_factors(theta_i, cfg)
    transmitted = WaveMode(k * par_t, k * s, "transmitted", cfg.n_t)
    reflected = WaveMode(-k * par_r, -k * s, "reflected", cfg.n_r)
    anti = WaveMode(-k * par_a, -k * s, "anti-incident", cfg.n_a)
    return transmitted, reflected, anti


def _fresnel_angle(theta_i: float, parallel: float) -> float:
    if theta_i == 0.0 or theta_i == math.pi:
        return 0.0 if parallel > 0.0 else math.pi
    return math.atan2(math.sin(theta_i), parallel)


def transmitted_angle(theta_i: float, cfg: BoundaryConfig) -> float:
    """Propagation angle of the transmitted mode, in [0, pi]."""
    par_t, _, _ = _parallel_factors(theta_i, cfg)
    return _fresnel_angle(theta_i, par_t)


def reflected_angle(theta_i: float, cfg: BoundaryConfig) -> float:
    """Fresnel angle of the reflected mode, in [0, pi].

    The reflected wave vector points along the negation of the direction
    this angle describes.
    """
    _, par_r, _ = _parallel_factors(theta_i, cfg)
    return _fresnel_angle(theta_i, par_r)
