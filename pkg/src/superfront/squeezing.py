"""Bogoliubov mixing of the incident/anti-incident pair into the transmitted/reflected pair.

The post-boundary state is a two-mode squeezed vacuum fixed by one real
squeezing ratio ``z``; photon-number and entanglement formulas use ``|z|``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ResonantDivergence
from .kinematics import DEGENERACY_TOL, BoundaryConfig, kinematic_aux, transmitted_angle

Z_LIMIT = 1.0 - 1e-12


@dataclass(frozen=True)
class ScatteringCoefficients:
    alpha: float
    a_coef: float
    b_coef: float
    z: float
    g_func_i: float
    g_func_t: float


@dataclass(frozen=True)
class PairDistribution:
    probabilities: np.ndarray
    truncation_mass: float

    @property
    def mean(self) -> float:
        return float(np.dot(np.arange(len(self.probabilities)), self.probabilities))


@dataclass(frozen=True)
class _MixingTerms:
    weight_i: float  # n_i h_i G(theta_i, n_i)
    weight_t: float  # n_t h_t G(theta_t, n_t)
    g_func_i: float
    g_func_t: float


def g_func(theta: float, n: float, beta: float) -> float:
    """G(theta, n) = 1 - beta*n*cos(theta); vanishes on a superluminal resonance."""
    return 1.0 - beta * n * math.cos(theta)


def _mixing_terms(theta_i: float, cfg: BoundaryConfig) -> _MixingTerms:
    aux = kinematic_aux(theta_i, cfg)
    theta_t = transmitted_angle(theta_i, cfg)
    gi = g_func(theta_i, cfg.n_i, cfg.beta)
    gt = g_func(theta_t, cfg.n_t, cfg.beta)
    return _MixingTerms(cfg.n_i * aux.h_i * gi, cfg.n_t * aux.h_t * gt, gi, gt)


def check_squeezing_ratio(z: float) -> float:
    az = abs(z)
    if not az < Z_LIMIT:
        raise ResonantDivergence(f"|z|={az!r} at or beyond resonance")
    return az


def bogoliubov_coefficients(theta_i: float, cfg: BoundaryConfig) -> ScatteringCoefficients:
    m = _mixing_terms(theta_i, cfg)
    if abs(m.g_func_t) < DEGENERACY_TOL:
        raise ResonantDivergence(f"G(theta_t, n_t)={m.g_func_t!r} at theta_i={theta_i!r}")
    radicand = m.weight_i / m.weight_t
    if radicand < 0.0:
        raise ResonantDivergence(
            f"negative mixing radicand {radicand!r} at theta_i={theta_i!r}", between_resonances=True
        )
    if radicand == 0.0:
        raise ResonantDivergence(f"G(theta_i, n_i)={m.g_func_i!r} at theta_i={theta_i!r}")
    alpha = math.sqrt(radicand)
    a_coef = (1.0 + radicand) / (2.0 * alpha)
    b_coef = (1.0 - radicand) / (2.0 * alpha)
    z = (1.0 - radicand) / (1.0 + radicand)
    check_squeezing_ratio(z)
    return ScatteringCoefficients(alpha, a_coef, b_coef, z, m.g_func_i, m.g_func_t)


def mean_pair_number(z: float) -> float:
    """Mean photon number in each of the transmitted and reflected modes."""
    az = check_squeezing_ratio(z)
    return az * az / ((1.0 - az) * (1.0 + az))


def mean_pair_number_closed_form(theta_i: float, cfg: BoundaryConfig) -> float:
    """Mean photon number written directly in the kinematic quantities.

    Independent of ``z``; the two routes must agree wherever both succeed.
    """
    m = _mixing_terms(theta_i, cfg)
    if abs(m.g_func_i) < DEGENERACY_TOL or abs(m.g_func_t) < DEGENERACY_TOL:
        raise ResonantDivergence(
            f"G factor vanishes at theta_i={theta_i!r} (G_i={m.g_func_i!r}, G_t={m.g_func_t!r})"
        )
    denom = 4.0 * m.weight_i * m.weight_t
    if denom < 0.0:
        raise ResonantDivergence(f"G factors of opposite sign at theta_i={theta_i!r}", between_resonances=True)
    return (m.weight_i - m.weight_t) ** 2 / denom


def pair_distribution(z: float, n_max: int) -> PairDistribution:
    """Probabilities of finding exactly n pairs, for n = 0..n_max."""
    az = check_squeezing_ratio(z)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    q = az * az
    n = np.arange(n_max + 1)
    probs = (1.0 - q) * q**n
    return PairDistribution(probs, q ** (n_max + 1))


def sample_pair_counts(z: float, seed: int, count: int) -> np.ndarray:
    """Draw pair counts from P(n) = (1 - z^2) z^(2n) by inverting the CDF.

    P(N >= n) = z^(2n), so n = floor(log(U) / log(z^2)) for U uniform on (0, 1].
    Each call owns its generator; the same (z, seed, count) gives the same draws.
    """
    az = check_squeezing_ratio(z)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if az == 0.0:
        return np.zeros(count, dtype=np.int64)
    rng = np.random.default_rng(seed)
    u = 1.0 - rng.random(count)
    return np.floor(np.log(u) / math.log(az * az)).astype(np.int64)
