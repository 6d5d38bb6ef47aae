"""Angular emission spectra, resonance regimes and resonance-angle roots."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .entanglement import ThermalContext, entanglement_entropy, log_negativity
from .errors import DegenerateGeometry, ResonantDivergence, RootBracketingFailure
from .kinematics import BoundaryConfig, reflected_angle, transmitted_angle
from .squeezing import bogoliubov_coefficients, g_func, mean_pair_number_closed_form


STATUSES = ("ok", "divergent", "between_resonances", "degenerate")
REGIMES = ("no_resonance", "single_resonance", "double_resonance")
SCAN_POINTS = 10_000


@dataclass(frozen=True)
class EmissionPoint:
    theta_i: float
    theta_t: float
    theta_r: float
    mean_pairs: float
    e_vn: float
    e_n: float
    status: str


@dataclass
class RegimeReport:
    regime: str
    incident_branch_active: bool
    reflected_branch_active: bool
    resonant_incidence_angles: list[tuple[float, str]] = field(default_factory=list)
    mapped_angles: list[tuple[float, float]] = field(default_factory=list)


def classify_regime(cfg: BoundaryConfig) -> RegimeReport:
    """Count active resonance branches from beta*n_i and beta*n_r alone."""
    incident = cfg.beta * cfg.n_i > 1.0
    reflected = cfg.beta * cfg.n_r > 1.0
    return RegimeReport(REGIMES[int(incident) + int(reflected)], incident, reflected)


def bisect(fn: Callable[[float], float], lo: float, hi: float, tol: float, max_iter: int = 200) -> float:
    """Bracketed bisection; ``fn(lo)`` and ``fn(hi)`` must differ in sign."""
    f_lo = fn(lo)
    f_hi = fn(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise RootBracketingFailure(f"no sign change on [{lo!r}, {hi!r}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol or mid in (lo, hi):
            break
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _transmitted_resonance_condition(cfg: BoundaryConfig) -> Callable[[float], float]:
    # zero of the G factor evaluated on the transmitted angle, where the
    # pair number diverges on the second branch
    def condition(theta_i: float) -> float:
        return g_func(transmitted_angle(theta_i, cfg), cfg.n_t, cfg.beta)

    return condition


def _first_bracket(fn: Callable[[float], float], grid: np.ndarray) -> tuple[float, float] | None:
    prev_x = prev_v = None
    for x in grid:
        try:
            v = fn(float(x))
        except DegenerateGeometry:
            continue
        if prev_v is not None and (v > 0.0) != (prev_v > 0.0):
            return prev_x, float(x)
        if v == 0.0:
            return float(x), float(x)
        prev_x, prev_v = float(x), v
    return None


def resonance_angles(cfg: BoundaryConfig, tol: float = 1e-13, scan_points: int = SCAN_POINTS) -> RegimeReport:
    """Classify the regime and locate each active branch's resonant incidence angle.

    The incident branch has the closed form arccos(1/(beta*n_i)). The second
    branch is bracketed on a uniform scan of (0, pi) and refined by bisection.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol!r}")
    report = classify_regime(cfg)
    roots: list[tuple[float, str]] = []
    if report.incident_branch_active:
        roots.append((math.acos(1.0 / (cfg.beta * cfg.n_i)), "incident"))
    if report.reflected_branch_active:
        condition = _transmitted_resonance_condition(cfg)
        grid = np.linspace(0.0, math.pi, scan_points + 2)[1:-1]
        bracket = _first_bracket(condition, grid)
        if bracket is None:
            raise RootBracketingFailure(
                f"beta*n_r={cfg.beta * cfg.n_r!r} > 1 but the resonance condition never changes sign"
            )
        lo, hi = bracket
        root = lo if lo == hi else bisect(condition, lo, hi, tol)
        roots.append((root, "reflected"))
    report.resonant_incidence_angles = roots
    report.mapped_angles = [(transmitted_angle(t, cfg), reflected_angle(t, cfg)) for t, _ in roots]
    return report


def _evaluate_point(theta_i: float, cfg: BoundaryConfig, ctx: ThermalContext, divergence_cap: float) -> EmissionPoint:
    nan, inf = math.nan, math.inf
    try:
        theta_t = transmitted_angle(theta_i, cfg)
        theta_r = reflected_angle(theta_i, cfg)
    except DegenerateGeometry:
        return EmissionPoint(theta_i, nan, nan, nan, nan, nan, "degenerate")
    try:
        mean_pairs = mean_pair_number_closed_form(theta_i, cfg)
        coeffs = bogoliubov_coefficients(theta_i, cfg)
    except ResonantDivergence as exc:
        if exc.between_resonances:
            return EmissionPoint(theta_i, theta_t, theta_r, nan, nan, nan, "between_resonances")
        return EmissionPoint(theta_i, theta_t, theta_r, inf, inf, inf, "divergent")
    if not mean_pairs <= divergence_cap:
        return EmissionPoint(theta_i, theta_t, theta_r, inf, inf, inf, "divergent")
    return EmissionPoint(
        theta_i,
        theta_t,
        theta_r,
        mean_pairs,
        entanglement_entropy(mean_pairs),
        log_negativity(ctx, coeffs.z),
        "ok",
    )


def _flag_bracketed_resonances(points: list[EmissionPoint]) -> list[EmissionPoint]:
    # A G factor crossing zero flips the sign of the mixing radicand, so every
    # resonance sits in a cell where between_resonances meets a real-valued
    # point. Resonances narrower than the grid step leave no large value on
    # the grid; flag both flanks so the peak is never lost.
    flagged = set()
    for j in range(len(points) - 1):
        a, b = points[j].status, points[j + 1].status
        if "degenerate" in (a, b):
            continue
        if (a == "between_resonances") != (b == "between_resonances"):
            flagged.update((j, j + 1))
    out = list(points)
    inf = math.inf
    for j in flagged:
        p = out[j]
        out[j] = EmissionPoint(p.theta_i, p.theta_t, p.theta_r, inf, inf, inf, "divergent")
    return out


def angular_spectrum(
    cfg: BoundaryConfig,
    grid: Sequence[float],
    ctx: ThermalContext | None = None,
    divergence_cap: float = 1e6,
) -> list[EmissionPoint]:
    """Pair number and entanglement for each incidence angle of ``grid``.

    Never raises for an individual point: resonant points come back with
    status ``divergent`` and infinite measures, points where the mixing ratio
    is imaginary with ``between_resonances`` and NaN measures. Points that
    flank a sign change of the mixing radicand are reported as divergent.
    """
    ctx = ctx or ThermalContext()
    if not divergence_cap > 0.0:
        raise ValueError(f"divergence_cap must be > 0, got {divergence_cap!r}")
    thetas = [float(t) for t in grid]
    for t in thetas:
        if not 0.0 <= t <= math.pi:
            raise ValueError(f"grid angle {t!r} outside [0, pi]")
    if any(b <= a for a, b in zip(thetas, thetas[1:])):
        raise ValueError("grid must be strictly increasing")
    points = [_evaluate_point(t, cfg, ctx, divergence_cap) for t in thetas]
    return _flag_bracketed_resonances(points)


def divergent_clusters(points: Iterable[EmissionPoint]) -> list[tuple[int, int]]:
    """Inclusive (start, end) index runs of consecutive divergent points."""
    runs: list[tuple[int, int]] = []
    start = None
    last = -1
    for j, p in enumerate(points):
        if p.status == "divergent":
            if start is None:
                start = j
        elif start is not None:
            runs.append((start, j - 1))
            start = None
        last = j
    if start is not None:
        runs.append((start, last))
    return runs


def uniform_grid(points: int, theta_min: float = 0.0, theta_max: float = math.pi, include_endpoints: bool = False) -> np.ndarray:
    """``points`` uniformly spaced angles; endpoints excluded unless requested."""
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    if include_endpoints:
        return np.linspace(theta_min, theta_max, points)
    return np.linspace(theta_min, theta_max, points + 2)[1:-1]
