"""Acceptance criteria, one check per criterion, each with its runtime budget.

Run with ``pytest tests/test_acceptance.py`` (summary lines appear in the
terminal summary) or ``python tests/test_acceptance.py``.
"""
import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest
from scipy import stats

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, figure2  # noqa: E402
from superfront import (  # noqa: E402
    BoundaryConfig,
    ResonantDivergence,
    ThermalContext,
    WaveMode,
    angular_spectrum,
    bogoliubov_coefficients,
    critical_occupancy,
    divergent_clusters,
    entanglement_entropy,
    log_negativity,
    mean_pair_number,
    mean_pair_number_closed_form,
    pair_distribution,
    resonance_angles,
    sample_pair_counts,
    scatter,
    uniform_grid,
)
from superfront.config import parse_config  # noqa: E402
from superfront.report import run_sample  # noqa: E402


def criterion_1():
    worst = 0.0
    for beta in (0.1, 0.5, 0.9, 0.99):
        cfg = BoundaryConfig(beta, 1.3, 1.3, 1.3, 1.3)
        for p in angular_spectrum(cfg, uniform_grid(2000)):
            if p.status != "ok":
                return False, f"beta={beta}: status {p.status} at theta_i={p.theta_i}"
            worst = max(worst, abs(p.mean_pairs), abs(p.e_vn))
    return worst <= 1e-12, f"max |mean_pairs|, |e_vn| = {worst:.3g}"


def criterion_2():
    rng = np.random.default_rng(20240601)
    worst_ab = worst_b2 = worst_routes = 0.0
    used = 0
    for _ in range(10_000):
        beta = rng.uniform(0.01, 0.999)
        n_i, n_t, n_r, n_a = rng.uniform(1.0, 2.0, size=4)
        theta = rng.uniform(0.0, math.pi)
        cfg = BoundaryConfig(beta, n_i, n_t, n_r, n_a)
        try:
            c = bogoliubov_coefficients(theta, cfg)
            closed = mean_pair_number_closed_form(theta, cfg)
        except ResonantDivergence:
            continue
        used += 1
        n_z = mean_pair_number(c.z)
        worst_ab = max(worst_ab, abs(c.a_coef**2 - c.b_coef**2 - 1.0))
        worst_b2 = max(worst_b2, abs(n_z - c.b_coef**2) / max(c.b_coef**2, 1e-300))
        worst_routes = max(worst_routes, abs(closed - n_z) / max(n_z, 1e-300))
    ok = worst_ab <= 1e-10 and worst_b2 <= 1e-10 and worst_routes <= 1e-9
    return ok, (
        f"{used} draws: |A^2-B^2-1| <= {worst_ab:.2g}, N(z) vs B^2 rel {worst_b2:.2g}, "
        f"routes rel {worst_routes:.2g}"
    )


def criterion_3():
    grid = uniform_grid(10_000)
    step = grid[1] - grid[0]
    details = []
    ok = True
    for beta, regime, n_clusters in ((0.9, "single_resonance", 1), (0.99, "double_resonance", 2)):
        cfg = figure2(beta)
        report = resonance_angles(cfg)
        clusters = divergent_clusters(angular_spectrum(cfg, grid))
        roots = [t for t, _ in report.resonant_incidence_angles]
        ok &= report.regime == regime and len(clusters) == n_clusters
        for start, end in clusters:
            inside = [r for r in roots if grid[start] - 2 * step <= r <= grid[end] + 2 * step]
            ok &= len(inside) == 1
        details.append(f"beta={beta}: {report.regime}, {len(clusters)} clusters, roots {[round(r, 6) for r in roots]}")
        if beta == 0.99:
            inc = dict((tag, t) for t, tag in report.resonant_incidence_angles)["incident"]
            err = abs(inc - math.acos(1 / 1.089))
            ok &= err <= 1e-9
            details.append(f"incident root error {err:.2g}")
    return ok, "; ".join(details)


def _shannon(z):
    n_max = 16
    while pair_distribution(z, n_max).truncation_mass >= 1e-12:
        n_max *= 2
    p = pair_distribution(z, n_max).probabilities
    p = p[p > 0]
    return float(-np.sum(p * np.log(p)))


def criterion_4():
    worst = max(abs(entanglement_entropy(mean_pair_number(z)) - _shannon(z)) for z in (0.1, 0.3, 0.5, 0.7, 0.9))
    return worst <= 1e-8, f"max |E_VN - Shannon| = {worst:.2g}"


def criterion_5():
    ok = True
    worst = 0.0
    for z in (0.3, 0.5, 0.9):
        n_c = critical_occupancy(z)
        worst = max(worst, abs(n_c - z / (1 - z)) / (z / (1 - z)))
        worst = max(worst, abs(2 * n_c + 1 - math.exp(2 * math.atanh(z))) / math.exp(2 * math.atanh(z)))
        ok &= log_negativity(ThermalContext(n_c * (1 - 1e-6)), z) > 0
        ok &= log_negativity(ThermalContext(n_c * (1 + 1e-6)), z) == 0
    ln3_err = abs(log_negativity(ThermalContext(0.0), 0.5) - math.log(3))
    ok &= worst <= 1e-12 and ln3_err <= 1e-12
    return ok, f"n_c rel err {worst:.2g}, |E_N(0, 0.5) - ln 3| = {ln3_err:.2g}"


def criterion_6():
    z, count, seed = 1 / math.sqrt(2), 100_000, 42
    draws = sample_pair_counts(z, seed, count)
    q = z * z
    sigma = math.sqrt(q) / (1 - q)
    mean_err = abs(draws.mean() - 1.0)
    mean_ok = mean_err <= 3 * sigma / math.sqrt(count)
    # bins 0..K-1 plus a lumped tail, all with expected count >= 5
    k = 1
    while count * (1 - q) * q**k >= 5:
        k += 1
    observed = np.array([np.sum(draws == n) for n in range(k)] + [np.sum(draws >= k)])
    expected = np.array([count * (1 - q) * q**n for n in range(k)] + [count * q**k])
    p_value = stats.chisquare(observed, expected).pvalue
    cfg = parse_config({"beta": 0.99, "n_i": 1.1, "n_t": 1.5, "n_r": 1.5, "n_a": 1.1, "seed": seed})
    first = run_sample(cfg, count=count, z=z).encode()
    second = run_sample(cfg, count=count, z=z).encode()
    ok = mean_ok and p_value > 1e-3 and first == second
    return ok, f"mean error {mean_err:.3g} (3 s.e. = {3 * sigma / math.sqrt(count):.3g}), chi2 p = {p_value:.3g}, identical bytes {first == second}"


def criterion_7():
    cfg = BoundaryConfig(1e-12, 1.1, 1.5, 1.5, 1.1)
    worst = 0.0
    for theta in np.linspace(0.0, math.pi, 1000):
        inc = WaveMode.incident(2.5, float(theta), 1.1)
        k = inc.magnitude
        t, r, a = scatter(inc, cfg)
        worst = max(
            worst,
            math.hypot(t.k_par - inc.k_par, t.k_perp - inc.k_perp) / k,
            math.hypot(r.k_par + inc.k_par, r.k_perp + inc.k_perp) / k,
            math.hypot(a.k_par + inc.k_par, a.k_perp + inc.k_perp) / k,
        )
    return worst <= 1e-9, f"max relative deviation {worst:.2g}"


def criterion_8():
    cfg = figure2(0.99)
    root = math.acos(1 / (0.99 * 1.1))
    pairs, entropies = [], []
    for delta in (1e-2, 1e-3, 1e-4):
        try:
            n = mean_pair_number_closed_form(root - delta, cfg)
        except ResonantDivergence as exc:
            where = "between resonances" if exc.between_resonances else "resonant"
            return False, f"theta_res - {delta:g} is {where}: {exc}"
        pairs.append(n)
        entropies.append(entanglement_entropy(n))
    ok = pairs[0] < pairs[1] < pairs[2] and entropies[0] < entropies[1] < entropies[2]
    return ok, f"mean_pairs {pairs}, E_VN {entropies}"


CRITERIA = [
    (1, "identity medium gives no pairs", criterion_1, 1.0),
    (2, "Bogoliubov consistency over random draws", criterion_2, 5.0),
    (3, "Figure-2 regimes, clusters and roots", criterion_3, 10.0),
    (4, "entropy matches Schmidt Shannon entropy", criterion_4, 1.0),
    (5, "thermal critical occupancy", criterion_5, 1.0),
    (6, "sampler statistics and reproducibility", criterion_6, 5.0),
    (7, "time-refraction limit of the kinematics", criterion_7, 1.0),
    (8, "divergence growth below the incident resonance", criterion_8, 1.0),
]


def run_criterion(number, name, check, budget):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    passed = ok and elapsed < budget
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {name} ({elapsed:.2f}s / {budget:g}s) - {detail}"
    return passed, line


@pytest.mark.parametrize("number, name, check, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(number, name, check, budget):
    passed, line = run_criterion(number, name, check, budget)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
