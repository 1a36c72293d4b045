"""Scenario files: a strict JSON schema for the command-line tools.

A scenario bundles everything one run needs: orbits, visibility window,
channel, optional link budget, the threshold grid, optional Monte-Carlo
settings and optional geometry/sweep sections. Validation is strict on
purpose: unknown keys and out-of-range values raise `ConfigError` with
the dotted path of the offending field, because a silently ignored typo
in a scenario file is a corrupted study, not a convenience.

Angles are degrees in files (people write degrees) and radians in code;
the builder methods do the conversion exactly once.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass

from .coverage import ConstellationSpec, LinkBudget, threshold_grid_db
from .geometry import EarthConstants, OrbitGeometry, VisibilityWindow
from .interference import ChannelParams
from .montecarlo import McConfig

__all__ = [
    "ConfigError",
    "OrbitRow",
    "GeometryGrid",
    "SweepSpec",
    "ScenarioConfig",
    "parse_scenario",
    "load_scenario",
]

_ID_PATTERN = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")

SWEEP_PARAMETERS = (
    "density_per_km",
    "altitude_km",
    "theta_deg",
    "omega_min_deg",
    "alpha",
    "m",
)


class ConfigError(ValueError):
    """Scenario validation failure, carrying the dotted field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _require_mapping(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(path, "expected an object")
    return value


def _check_keys(mapping: dict, allowed: set[str], path: str) -> None:
    unknown = sorted(set(mapping) - allowed)
    if unknown:
        raise ConfigError(path, f"unknown key(s): {', '.join(unknown)}")


def _number(mapping: dict, key: str, path: str, default=None, *, lo=None, hi=None, lo_open=False, hi_open=False):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"{path}.{key}" if path else key, "missing required value")
        return default
    value = mapping[key]
    where = f"{path}.{key}" if path else key
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(where, "expected a number")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(where, "expected a finite number")
    if lo is not None and (value <= lo if lo_open else value < lo):
        raise ConfigError(where, f"must be {'>' if lo_open else '>='} {lo}")
    if hi is not None and (value >= hi if hi_open else value > hi):
        raise ConfigError(where, f"must be {'<' if hi_open else '<='} {hi}")
    return value


def _integer(mapping: dict, key: str, path: str, default=None, *, lo=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"{path}.{key}" if path else key, "missing required value")
        return default
    value = mapping[key]
    where = f"{path}.{key}" if path else key
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(where, "expected an integer")
    if lo is not None and value < lo:
        raise ConfigError(where, f"must be >= {lo}")
    return value


@dataclass(frozen=True)
class OrbitRow:
    altitude_km: float
    theta_deg: float
    phi_deg: float
    density_per_km: float


@dataclass(frozen=True)
class GeometryGrid:
    theta_start_deg: float
    theta_stop_deg: float
    theta_step_deg: float
    omega_min_deg: tuple[float, ...]


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    values: tuple[float, ...]


@dataclass(frozen=True)
class ScenarioConfig:
    """One validated scenario. Construct through `parse_scenario`."""

    scenario_id: str
    earth: EarthConstants
    omega_min_deg: float
    orbit_rows: tuple[OrbitRow, ...]
    channel: ChannelParams
    budget: LinkBudget | None
    thresholds_db: tuple[float, ...]
    mc: McConfig | None
    geometry: GeometryGrid | None
    sweep: SweepSpec | None

    def orbits(self) -> tuple[OrbitGeometry, ...]:
        # radians(180) can round one ulp past pi; keep the boundary legal
        return tuple(
            OrbitGeometry(
                altitude_km=row.altitude_km,
                theta_rad=min(math.radians(row.theta_deg), math.pi),
                phi_rad=math.radians(row.phi_deg),
                earth=self.earth,
            )
            for row in self.orbit_rows
        )

    def densities(self) -> tuple[float, ...]:
        return tuple(row.density_per_km for row in self.orbit_rows)

    def window(self) -> VisibilityWindow:
        return VisibilityWindow.from_min_elevation(math.radians(self.omega_min_deg), self.orbits()[0])

    def constellation(self) -> ConstellationSpec:
        return ConstellationSpec(
            orbits=self.orbits(),
            densities_per_km=self.densities(),
            window=self.window(),
            channel=self.channel,
        )


def _parse_earth(data: dict) -> EarthConstants:
    section = _require_mapping(data.get("earth", {}), "earth")
    _check_keys(section, {"radius_km", "gravitational_constant", "mass_kg"}, "earth")
    return EarthConstants(
        radius_km=_number(section, "radius_km", "earth", 6371.0, lo=0.0, lo_open=True),
        gravitational_constant=_number(
            section, "gravitational_constant", "earth", 6.67259e-11, lo=0.0, lo_open=True
        ),
        mass_kg=_number(section, "mass_kg", "earth", 5.9736e24, lo=0.0, lo_open=True),
    )


def _parse_orbits(data: dict) -> tuple[OrbitRow, ...]:
    if "orbits" not in data:
        raise ConfigError("orbits", "missing required value")
    rows = data["orbits"]
    if not isinstance(rows, list) or not rows:
        raise ConfigError("orbits", "expected a non-empty array")
    parsed = []
    for i, row in enumerate(rows):
        path = f"orbits[{i}]"
        row = _require_mapping(row, path)
        _check_keys(row, {"altitude_km", "theta_deg", "phi_deg", "density_per_km"}, path)
        parsed.append(
            OrbitRow(
                altitude_km=_number(row, "altitude_km", path, lo=0.0, lo_open=True),
                theta_deg=_number(row, "theta_deg", path, lo=0.0, hi=180.0),
                phi_deg=_number(row, "phi_deg", path, 0.0, lo=0.0, hi=360.0, hi_open=True),
                density_per_km=_number(row, "density_per_km", path, lo=0.0, lo_open=True),
            )
        )
    altitudes = {row.altitude_km for row in parsed}
    if len(altitudes) > 1:
        raise ConfigError("orbits", "all orbits must share one altitude shell")
    return tuple(parsed)


def _parse_channel(data: dict) -> ChannelParams:
    section = _require_mapping(data.get("channel", {}), "channel")
    _check_keys(section, {"alpha", "m", "g_i_bar_db"}, "channel")
    g_db = _number(section, "g_i_bar_db", "channel", -13.0, hi=0.0)
    return ChannelParams(
        alpha=_number(section, "alpha", "channel", 2.0, lo=0.0, lo_open=True),
        m=_number(section, "m", "channel", 1.0, lo=0.5),
        g_i_bar=10.0 ** (g_db / 10.0),
    )


def _parse_budget(data: dict) -> LinkBudget | None:
    if "budget" not in data:
        return None
    section = _require_mapping(data["budget"], "budget")
    allowed = {"tx_power_dbm", "serving_gain_db", "noise_density_dbm_hz", "noise_figure_db", "bandwidth_hz"}
    _check_keys(section, allowed, "budget")
    return LinkBudget(
        tx_power_dbm=_number(section, "tx_power_dbm", "budget", 40.0),
        serving_gain_db=_number(section, "serving_gain_db", "budget", 30.0),
        noise_density_dbm_hz=_number(section, "noise_density_dbm_hz", "budget", -174.0),
        noise_figure_db=_number(section, "noise_figure_db", "budget", 11.0),
        bandwidth_hz=_number(section, "bandwidth_hz", "budget", 1.0e7, lo=0.0, lo_open=True),
    )


def _parse_thresholds(data: dict) -> tuple[float, ...]:
    section = _require_mapping(data.get("thresholds", {}), "thresholds")
    _check_keys(section, {"start_db", "stop_db", "step_db"}, "thresholds")
    start = _number(section, "start_db", "thresholds", -10.0)
    stop = _number(section, "stop_db", "thresholds", 30.0)
    step = _number(section, "step_db", "thresholds", 5.0, lo=0.0, lo_open=True)
    if stop < start:
        raise ConfigError("thresholds.stop_db", "must be >= start_db")
    return threshold_grid_db(start, stop, step)


def _parse_mc(data: dict) -> McConfig | None:
    if "mc" not in data:
        return None
    section = _require_mapping(data["mc"], "mc")
    _check_keys(section, {"trials", "seed", "batch"}, "mc")
    return McConfig(
        trials=_integer(section, "trials", "mc", 100_000, lo=1),
        seed=_integer(section, "seed", "mc", 1729, lo=0),
        batch=_integer(section, "batch", "mc", 10_000, lo=1),
    )


def _parse_geometry(data: dict) -> GeometryGrid | None:
    if "geometry" not in data:
        return None
    section = _require_mapping(data["geometry"], "geometry")
    _check_keys(section, {"theta_start_deg", "theta_stop_deg", "theta_step_deg", "omega_min_deg"}, "geometry")
    start = _number(section, "theta_start_deg", "geometry", 0.0, lo=0.0, hi=180.0)
    stop = _number(section, "theta_stop_deg", "geometry", 180.0, lo=0.0, hi=180.0)
    step = _number(section, "theta_step_deg", "geometry", 1.0, lo=0.0, lo_open=True)
    if stop < start:
        raise ConfigError("geometry.theta_stop_deg", "must be >= theta_start_deg")
    omegas = section.get("omega_min_deg", [0.0])
    if not isinstance(omegas, list) or not omegas:
        raise ConfigError("geometry.omega_min_deg", "expected a non-empty array")
    parsed = []
    for i, value in enumerate(omegas):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"geometry.omega_min_deg[{i}]", "expected a number")
        if not 0.0 <= float(value) < 90.0:
            raise ConfigError(f"geometry.omega_min_deg[{i}]", "must lie in [0, 90)")
        parsed.append(float(value))
    return GeometryGrid(start, stop, step, tuple(parsed))


def _parse_sweep(data: dict) -> SweepSpec | None:
    if "sweep" not in data:
        return None
    section = _require_mapping(data["sweep"], "sweep")
    _check_keys(section, {"parameter", "values"}, "sweep")
    parameter = section.get("parameter")
    if parameter not in SWEEP_PARAMETERS:
        raise ConfigError("sweep.parameter", f"expected one of {', '.join(SWEEP_PARAMETERS)}")
    values = section.get("values")
    if not isinstance(values, list) or not values:
        raise ConfigError("sweep.values", "expected a non-empty array")
    parsed = []
    for i, value in enumerate(values):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"sweep.values[{i}]", "expected a number")
        parsed.append(float(value))
    return SweepSpec(parameter, tuple(parsed))


def parse_scenario(data) -> ScenarioConfig:
    """Validate a decoded scenario object into a ScenarioConfig."""
    data = _require_mapping(data, "")
    allowed = {
        "scenario_id",
        "earth",
        "window",
        "orbits",
        "channel",
        "budget",
        "thresholds",
        "mc",
        "geometry",
        "sweep",
    }
    _check_keys(data, allowed, "")
    scenario_id = data.get("scenario_id", "scenario")
    if not isinstance(scenario_id, str) or not _ID_PATTERN.match(scenario_id):
        raise ConfigError("scenario_id", "expected a name of letters, digits, '._-'")
    window = _require_mapping(data.get("window", {}), "window")
    _check_keys(window, {"omega_min_deg"}, "window")
    omega = _number(window, "omega_min_deg", "window", 0.0, lo=0.0, hi=90.0, hi_open=True)
    config = ScenarioConfig(
        scenario_id=scenario_id,
        earth=_parse_earth(data),
        omega_min_deg=omega,
        orbit_rows=_parse_orbits(data),
        channel=_parse_channel(data),
        budget=_parse_budget(data),
        thresholds_db=_parse_thresholds(data),
        mc=_parse_mc(data),
        geometry=_parse_geometry(data),
        sweep=_parse_sweep(data),
    )
    try:
        config.constellation()
    except ValueError as exc:
        raise ConfigError("orbits", str(exc)) from None
    return config


def load_scenario(path) -> ScenarioConfig:
    """Read and validate a scenario file."""
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError("", f"cannot read scenario file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"invalid JSON: {exc}") from None
    return parse_scenario(data)
