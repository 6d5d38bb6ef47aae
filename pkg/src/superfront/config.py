"""Run configuration: parsing and validation of JSON config documents."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from .entanglement import ThermalContext
from .errors import ConfigError
from .kinematics import BoundaryConfig

FORMATS = ("csv", "json")
DEFAULT_POINTS = 2000
DEFAULT_DIVERGENCE_CAP = 1e6

_KNOWN_KEYS = {
    "beta", "u_over_c", "n_i", "n_t", "n_r", "n_a", "grid", "n_bar",
    "divergence_cap", "seed", "format", "out", "z", "theta_i", "count", "id", "configs",
}
_GRID_KEYS = {"points", "theta_min", "theta_max", "include_endpoints"}


@dataclass(frozen=True)
class GridSpec:
    points: int = DEFAULT_POINTS
    theta_min: float = 0.0
    theta_max: float = math.pi
    include_endpoints: bool = False


@dataclass(frozen=True)
class RunConfig:
    boundary: BoundaryConfig
    grid: GridSpec = field(default_factory=GridSpec)
    thermal: ThermalContext = field(default_factory=ThermalContext)
    divergence_cap: float = DEFAULT_DIVERGENCE_CAP
    seed: int = 0
    format: str = "csv"
    out: str | None = None
    z: float | None = None
    theta_i: float | None = None
    count: int | None = None
    config_id: str | None = None


def _number(doc: Mapping[str, Any], key: str, path: str) -> float:
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(path, "must be finite")
    return value


def _integer(doc: Mapping[str, Any], key: str, path: str) -> int:
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(path, f"expected an integer, got {value!r}")
    return value


def _boundary(doc: Mapping[str, Any], prefix: str) -> BoundaryConfig:
    has_beta, has_u = "beta" in doc, "u_over_c" in doc
    if has_beta and has_u:
        raise ConfigError(prefix + "beta", "give exactly one of beta and u_over_c")
    if not (has_beta or has_u):
        raise ConfigError(prefix + "beta", "one of beta or u_over_c is required")
    if has_beta:
        beta = _number(doc, "beta", prefix + "beta")
        if not 0.0 < beta < 1.0:
            raise ConfigError(prefix + "beta", f"out of range (0, 1): {beta!r}")
    else:
        u = _number(doc, "u_over_c", prefix + "u_over_c")
        if not u > 1.0:
            raise ConfigError(prefix + "u_over_c", f"must exceed 1: {u!r}")
        beta = 1.0 / u
    indices = {}
    for name in ("n_i", "n_t", "n_r", "n_a"):
        if name not in doc:
            raise ConfigError(prefix + name, "required")
        n = _number(doc, name, prefix + name)
        if not n > 0.0:
            raise ConfigError(prefix + name, f"refractive index must be > 0: {n!r}")
        indices[name] = n
    return BoundaryConfig(beta=beta, **indices)


def _grid(raw: Any, path: str) -> GridSpec:
    if not isinstance(raw, Mapping):
        raise ConfigError(path, "expected an object")
    unknown = set(raw) - _GRID_KEYS
    if unknown:
        raise ConfigError(f"{path}.{sorted(unknown)[0]}", "unknown key")
    kw: dict[str, Any] = {}
    if "points" in raw:
        kw["points"] = _integer(raw, "points", path + ".points")
        if kw["points"] < 2:
            raise ConfigError(path + ".points", f"must be >= 2: {kw['points']!r}")
    for key in ("theta_min", "theta_max"):
        if key in raw:
            kw[key] = _number(raw, key, f"{path}.{key}")
            if not 0.0 <= kw[key] <= math.pi:
                raise ConfigError(f"{path}.{key}", "must lie in [0, pi]")
    if "include_endpoints" in raw:
        if not isinstance(raw["include_endpoints"], bool):
            raise ConfigError(path + ".include_endpoints", "expected a boolean")
        kw["include_endpoints"] = raw["include_endpoints"]
    spec = GridSpec(**kw)
    if not spec.theta_min < spec.theta_max:
        raise ConfigError(path + ".theta_max", "must exceed theta_min")
    return spec


def _document(source: str | Mapping[str, Any]) -> Mapping[str, Any]:
    if isinstance(source, str):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ConfigError("<document>", f"not valid JSON: {exc}") from None
    else:
        doc = source
    if not isinstance(doc, Mapping):
        raise ConfigError("<document>", "top level must be an object")
    return doc


def parse_config(source: str | Mapping[str, Any], prefix: str = "") -> RunConfig:
    """Validate a config document (JSON text or an already-parsed mapping).

    Raises ConfigError naming the offending field path.
    """
    doc = _document(source)
    unknown = set(doc) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(prefix + sorted(unknown)[0], "unknown key")

    kw: dict[str, Any] = {"boundary": _boundary(doc, prefix)}
    if "grid" in doc:
        kw["grid"] = _grid(doc["grid"], prefix + "grid")
    if "n_bar" in doc:
        n_bar = _number(doc, "n_bar", prefix + "n_bar")
        if n_bar < 0.0:
            raise ConfigError(prefix + "n_bar", f"must be >= 0: {n_bar!r}")
        kw["thermal"] = ThermalContext(n_bar)
    if "divergence_cap" in doc:
        cap = _number(doc, "divergence_cap", prefix + "divergence_cap")
        if not cap > 0.0:
            raise ConfigError(prefix + "divergence_cap", f"must be > 0: {cap!r}")
        kw["divergence_cap"] = cap
    if "seed" in doc:
        kw["seed"] = _integer(doc, "seed", prefix + "seed")
    if "format" in doc:
        if doc["format"] not in FORMATS:
            raise ConfigError(prefix + "format", f"must be one of {FORMATS}: {doc['format']!r}")
        kw["format"] = doc["format"]
    if "out" in doc:
        if not isinstance(doc["out"], str):
            raise ConfigError(prefix + "out", "expected a path string")
        kw["out"] = doc["out"]
    if "z" in doc and "theta_i" in doc:
        raise ConfigError(prefix + "z", "give at most one of z and theta_i")
    if "z" in doc:
        z = _number(doc, "z", prefix + "z")
        if not abs(z) < 1.0:
            raise ConfigError(prefix + "z", f"|z| must be < 1: {z!r}")
        kw["z"] = z
    if "theta_i" in doc:
        theta = _number(doc, "theta_i", prefix + "theta_i")
        if not 0.0 <= theta <= math.pi:
            raise ConfigError(prefix + "theta_i", "must lie in [0, pi]")
        kw["theta_i"] = theta
    if "count" in doc:
        kw["count"] = _integer(doc, "count", prefix + "count")
        if kw["count"] < 1:
            raise ConfigError(prefix + "count", "must be >= 1")
    if "id" in doc:
        kw["config_id"] = str(doc["id"])
    return RunConfig(**kw)


def parse_sweep(source: str | Mapping[str, Any]) -> list[RunConfig]:
    """Parse a sweep document: shared top-level keys overlaid by each entry of ``configs``."""
    doc = _document(source)
    entries = doc.get("configs")
    if not isinstance(entries, list) or not entries:
        raise ConfigError("configs", "a non-empty list of config objects is required")
    shared = {k: v for k, v in doc.items() if k != "configs"}
    runs = []
    for j, entry in enumerate(entries):
        if not isinstance(entry, Mapping):
            raise ConfigError(f"configs[{j}]", "expected an object")
        merged = dict(shared)
        # an entry choosing u_over_c replaces a shared beta and vice versa
        if "beta" in entry or "u_over_c" in entry:
            merged.pop("beta", None)
            merged.pop("u_over_c", None)
        merged.update(entry)
        merged.setdefault("id", str(j))
        runs.append(parse_config(merged, prefix=f"configs[{j}]."))
    return runs


def load_config(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ConfigError("--config", f"cannot read {path}: {exc.strerror}") from None
