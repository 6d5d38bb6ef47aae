"""Run orchestration and deterministic CSV/JSON serialization.

Floats are written with 12 significant digits. Non-finite values use the
tokens ``inf`` and ``nan``: bare in CSV, as strings in JSON (so documents
stay standard JSON and still round-trip through :func:`parse_float`).
"""
from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Sequence

from .config import RunConfig
from .entanglement import critical_occupancy, entanglement_entropy, log_negativity, symplectic_eigenvalue
from .spectrum import EmissionPoint, angular_spectrum, resonance_angles, uniform_grid
from .squeezing import bogoliubov_coefficients, mean_pair_number, sample_pair_counts

SPECTRUM_FIELDS = ("theta_i", "theta_t", "theta_r", "mean_pairs", "e_vn", "e_n", "status")
RESONANCE_FIELDS = ("regime", "incident_branch_active", "reflected_branch_active", "branch", "theta_i", "theta_t", "theta_r")
ENTANGLE_FIELDS = ("z", "mean_pairs", "e_vn", "mu", "e_n", "n_bar_c")
SAMPLE_FIELD = "pairs"


def fmt_float(x: float) -> str:
    return format(float(x), ".12g")


def json_float(x: float) -> float | str:
    x = float(x)
    if not math.isfinite(x):
        return fmt_float(x)
    return float(fmt_float(x))


def parse_float(token: float | str) -> float:
    """Inverse of the serialized float forms (CSV token or JSON value)."""
    return float(token)


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _json(doc: Any) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _cell(value: Any) -> Any:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt_float(value)
    return value


def _jvalue(value: Any) -> Any:
    if isinstance(value, float):
        return json_float(value)
    return value


def spectrum_points(cfg: RunConfig) -> list[EmissionPoint]:
    g = cfg.grid
    grid = uniform_grid(g.points, g.theta_min, g.theta_max, g.include_endpoints)
    return angular_spectrum(cfg.boundary, grid, cfg.thermal, cfg.divergence_cap)


def _point_values(p: EmissionPoint) -> list[Any]:
    return [p.theta_i, p.theta_t, p.theta_r, p.mean_pairs, p.e_vn, p.e_n, p.status]


def run_spectrum(cfg: RunConfig, fmt: str | None = None) -> str:
    points = spectrum_points(cfg)
    if (fmt or cfg.format) == "json":
        return _json([{k: _jvalue(v) for k, v in zip(SPECTRUM_FIELDS, _point_values(p))} for p in points])
    return _csv(SPECTRUM_FIELDS, ([_cell(v) for v in _point_values(p)] for p in points))


def run_sweep(cfgs: Sequence[RunConfig], fmt: str | None = None) -> str:
    """Spectra of several configs concatenated, tagged with a ``config_id`` column."""
    fields = ("config_id",) + SPECTRUM_FIELDS
    rows = []
    for j, cfg in enumerate(cfgs):
        cid = cfg.config_id if cfg.config_id is not None else str(j)
        rows.extend([cid] + _point_values(p) for p in spectrum_points(cfg))
    if (fmt or cfgs[0].format) == "json":
        return _json([{k: _jvalue(v) for k, v in zip(fields, row)} for row in rows])
    return _csv(fields, ([_cell(v) for v in row] for row in rows))


def run_resonances(cfg: RunConfig, fmt: str | None = None) -> str:
    report = resonance_angles(cfg.boundary)
    roots = [
        {"branch": branch, "theta_i": theta_i, "theta_t": theta_t, "theta_r": theta_r}
        for (theta_i, branch), (theta_t, theta_r) in zip(report.resonant_incidence_angles, report.mapped_angles)
    ]
    if (fmt or cfg.format) == "json":
        return _json({
            "regime": report.regime,
            "incident_branch_active": report.incident_branch_active,
            "reflected_branch_active": report.reflected_branch_active,
            "resonances": [{k: _jvalue(v) for k, v in r.items()} for r in roots],
        })
    head = [report.regime, _cell(report.incident_branch_active), _cell(report.reflected_branch_active)]
    # a regime without roots still gets one row so the file is never header-only
    rows = [head + [r["branch"], *(_cell(r[k]) for k in ("theta_i", "theta_t", "theta_r"))] for r in roots]
    return _csv(RESONANCE_FIELDS, rows or [head + ["", "", "", ""]])


def resolve_z(cfg: RunConfig, z: float | None = None, theta_i: float | None = None) -> float:
    """Squeezing ratio from an explicit z, an explicit theta_i, or the config (in that order)."""
    if z is None and theta_i is None:
        z, theta_i = cfg.z, cfg.theta_i
    if z is not None and theta_i is not None:
        raise ValueError("give at most one of z and theta_i")
    if z is not None:
        return z
    if theta_i is None:
        raise ValueError("one of z and theta_i is required")
    return bogoliubov_coefficients(theta_i, cfg.boundary).z


def entangle_values(cfg: RunConfig, z: float | None = None, theta_i: float | None = None) -> dict[str, float]:
    z = resolve_z(cfg, z, theta_i)
    n = mean_pair_number(z)
    return {
        "z": z,
        "mean_pairs": n,
        "e_vn": entanglement_entropy(n),
        "mu": symplectic_eigenvalue(cfg.thermal, z),
        "e_n": log_negativity(cfg.thermal, z),
        "n_bar_c": critical_occupancy(z),
    }


def run_entangle(cfg: RunConfig, z: float | None = None, theta_i: float | None = None, fmt: str | None = None) -> str:
    values = entangle_values(cfg, z, theta_i)
    if (fmt or cfg.format) == "json":
        return _json({k: json_float(v) for k, v in values.items()})
    return _csv(ENTANGLE_FIELDS, [[fmt_float(values[k]) for k in ENTANGLE_FIELDS]])


def run_sample(cfg: RunConfig, count: int | None = None, z: float | None = None, fmt: str | None = None) -> str:
    """Seeded pair-count draws at ``z`` (or at the z of the configured theta_i)."""
    count = count if count is not None else (cfg.count or 1000)
    draws = sample_pair_counts(resolve_z(cfg, z), cfg.seed, count)
    if (fmt or cfg.format) == "json":
        return _json([int(d) for d in draws])
    return _csv((SAMPLE_FIELD,), ([int(d)] for d in draws))
