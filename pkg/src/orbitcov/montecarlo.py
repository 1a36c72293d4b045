"""Monte-Carlo estimators that shadow every analytic quantity.

Each estimator simulates the actual point process: Poisson-many
satellites uniform on each orbit circle, independent unit-mean gamma
fading powers, the user served by the nearest visible satellite. The
batch kernels never build 3-D positions; for a point at orbit angle psi
the height above the user's horizon plane is z = -R sin(theta) cos(psi)
and the law of cosines gives the distance directly, so a trial is a few
vectorized passes over a flat array of satellites. `sample_orbit` keeps
the explicit 3-D construction (with the elevation-angle visibility
test) for inspection and as an independent check of that shortcut.

Reproducibility contract: a run is determined by (seed, trials, batch).
Each batch consumes its own child stream of the seed, so results do not
depend on how batches are scheduled, only on how the work is split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coverage import ConstellationSpec, CoverageCurve, LinkBudget, db_to_linear
from .geometry import (
    TWO_PI,
    OrbitGeometry,
    VisibilityWindow,
    orbit_plane_basis,
)
from .numerics import RandomSource

__all__ = [
    "McConfig",
    "DegenerateSampleError",
    "SatelliteSnapshot",
    "sample_orbit",
    "empirical_nearest_ccdf",
    "empirical_sir_coverage",
    "empirical_snr_sinr_coverage",
    "empirical_max_sir_coverage",
]

KM_IN_M = 1000.0

# trials that survive conditioning below this are too few for any
# statement at the package's tolerances
MIN_CONDITIONING_TRIALS = 100


class DegenerateSampleError(RuntimeError):
    """Raised when conditioning leaves too few trials to estimate from."""


@dataclass(frozen=True)
class McConfig:
    """Trial count, seed and batch size for one estimator run.

    The batch size is part of the reproducibility contract: batches map
    to child random streams one-to-one.
    """

    trials: int = 100_000
    seed: int = 1729
    batch: int = 10_000

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trial count must be at least 1")
        if self.batch < 1:
            raise ValueError("batch size must be at least 1")

    def batch_sizes(self) -> list[int]:
        full, rem = divmod(self.trials, self.batch)
        return [self.batch] * full + ([rem] if rem else [])


@dataclass
class SatelliteSnapshot:
    """One realization of an orbit's satellites, sorted by distance."""

    positions_km: np.ndarray  # (M, 3)
    distances_km: np.ndarray  # (M,)
    visible: np.ndarray  # (M,) bool

    @property
    def count(self) -> int:
        return self.distances_km.size

    @property
    def nearest_visible_km(self) -> float:
        """Distance to the nearest visible satellite, inf if none."""
        if not self.visible.any():
            return math.inf
        return float(self.distances_km[self.visible].min())


def sample_orbit(
    orbit: OrbitGeometry,
    window: VisibilityWindow,
    density_per_km: float,
    rng: RandomSource,
) -> SatelliteSnapshot:
    """Draw one Poisson snapshot of the orbit in explicit 3-D coordinates.

    Visibility here is the elevation-angle test against the user at
    (0, 0, R_E), not the cap-height shortcut the batch kernels use; the
    two must agree, and tests lean on that.
    """
    if density_per_km <= 0:
        raise ValueError("satellite density must be positive")
    gen = rng.generator
    R = orbit.radius_km
    re = orbit.earth.radius_km
    count = gen.poisson(TWO_PI * R * density_per_km)
    psi = gen.uniform(0.0, TWO_PI, count)
    e1, e2, _ = orbit_plane_basis(orbit.theta_rad, orbit.phi_rad)
    pos = R * (np.cos(psi)[:, None] * e1 + np.sin(psi)[:, None] * e2)
    delta = pos - np.array([0.0, 0.0, re])
    dist = np.linalg.norm(delta, axis=1)
    with np.errstate(invalid="ignore"):
        visible = delta[:, 2] >= dist * math.sin(window.omega_min_rad)
    order = np.argsort(dist, kind="stable")
    return SatelliteSnapshot(
        positions_km=pos[order],
        distances_km=dist[order],
        visible=visible[order],
    )


def _segment_starts(counts: np.ndarray) -> np.ndarray:
    starts = np.zeros(counts.size, dtype=np.int64)
    np.cumsum(counts[:-1], out=starts[1:])
    return starts


def _nearest_batch(
    orbit: OrbitGeometry, window: VisibilityWindow, gen: np.random.Generator, density: float, n: int
) -> np.ndarray:
    """Nearest visible-satellite distance (km) per trial, inf when none."""
    R = orbit.radius_km
    re = orbit.earth.radius_km
    counts = gen.poisson(TWO_PI * R * density, n)
    total = int(counts.sum())
    psi = gen.uniform(0.0, TWO_PI, total)
    z = -R * math.sin(orbit.theta_rad) * np.cos(psi)
    r = np.sqrt(R * R + re * re - 2.0 * re * z)
    r_vis = np.where(z > window.cap_base_km, r, np.inf)
    nearest = np.full(n, np.inf)
    occupied = counts > 0
    if total:
        nearest[occupied] = np.minimum.reduceat(r_vis, _segment_starts(counts)[occupied])
    return nearest


def _sir_batch(
    orbit: OrbitGeometry,
    window: VisibilityWindow,
    gen: np.random.Generator,
    density: float,
    m: float,
    alpha: float,
    n: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-trial (nearest_km, serving fading power, interference sum).

    The interference sum is over visible satellites beyond the serving
    one, of fading_power * r^-alpha with r in km and no gain factor; the
    caller applies units and the mean interferer gain.
    """
    R = orbit.radius_km
    re = orbit.earth.radius_km
    counts = gen.poisson(TWO_PI * R * density, n)
    total = int(counts.sum())
    psi = gen.uniform(0.0, TWO_PI, total)
    z = -R * math.sin(orbit.theta_rad) * np.cos(psi)
    r = np.sqrt(R * R + re * re - 2.0 * re * z)
    visible = z > window.cap_base_km
    r_vis = np.where(visible, r, np.inf)
    nearest = np.full(n, np.inf)
    occupied = counts > 0
    starts = _segment_starts(counts)
    if total:
        nearest[occupied] = np.minimum.reduceat(r_vis, starts[occupied])
    fading = gen.gamma(m, 1.0 / m, total)
    interferer = visible & (r > np.repeat(nearest, counts))
    weight = np.where(interferer, fading * r ** -alpha, 0.0)
    interference = np.zeros(n)
    if total:
        interference[occupied] = np.add.reduceat(weight, starts[occupied])
    serving_fading = gen.gamma(m, 1.0 / m, n)
    return nearest, serving_fading, interference


def _wilson_bounds(successes: np.ndarray, trials: int, z: float = 1.96) -> tuple[np.ndarray, np.ndarray]:
    k = np.asarray(successes, dtype=float)
    n = float(trials)
    p = k / n
    denom = 1.0 + z * z / n
    center = (p + z * z / (2.0 * n)) / denom
    half = z * np.sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom
    return np.clip(center - half, 0.0, 1.0), np.clip(center + half, 0.0, 1.0)


def empirical_nearest_ccdf(
    orbit: OrbitGeometry,
    window: VisibilityWindow,
    density_per_km: float,
    r_grid_km,
    cfg: McConfig,
) -> tuple[np.ndarray, int]:
    """Empirical CCDF of the nearest visible distance on a grid of radii.

    Conditioned on at least one visible satellite; returns the CCDF
    values and the number of trials that survived the conditioning.
    """
    if density_per_km <= 0:
        raise ValueError("satellite density must be positive")
    grid = np.asarray(r_grid_km, dtype=float)
    rng = RandomSource(cfg.seed)
    exceed = np.zeros(grid.size, dtype=np.int64)
    survivors = 0
    for index, size in enumerate(cfg.batch_sizes()):
        gen = rng.child(index).generator
        nearest = _nearest_batch(orbit, window, gen, density_per_km, size)
        finite = np.sort(nearest[np.isfinite(nearest)])
        survivors += finite.size
        exceed += finite.size - np.searchsorted(finite, grid, side="right")
    if survivors < MIN_CONDITIONING_TRIALS:
        raise DegenerateSampleError(
            f"only {survivors} of {cfg.trials} trials had a visible satellite; "
            f"need at least {MIN_CONDITIONING_TRIALS}"
        )
    return exceed / survivors, survivors


def _mc_metadata(cfg: McConfig, conditioning: str, **extra) -> dict:
    meta = {"trials": cfg.trials, "seed": cfg.seed, "batch": cfg.batch, "conditioning": conditioning}
    meta.update(extra)
    return meta


def _curve_pair(
    thresholds_db,
    covered_cond: np.ndarray,
    survivors: int,
    covered_total: np.ndarray,
    total: int,
    kind: str,
    cfg: McConfig,
    **extra,
) -> tuple[CoverageCurve, CoverageCurve]:
    if survivors < MIN_CONDITIONING_TRIALS:
        raise DegenerateSampleError(
            f"only {survivors} of {total} trials survived conditioning; "
            f"need at least {MIN_CONDITIONING_TRIALS}"
        )
    lo_c, hi_c = _wilson_bounds(covered_cond, survivors)
    lo_u, hi_u = _wilson_bounds(covered_total, total)
    conditional = CoverageCurve(
        thresholds_db=tuple(thresholds_db),
        values=tuple(covered_cond / survivors),
        kind=kind,
        metadata=_mc_metadata(cfg, "visible", **extra),
        ci_low=tuple(lo_c),
        ci_high=tuple(hi_c),
    )
    unconditional = CoverageCurve(
        thresholds_db=tuple(thresholds_db),
        values=tuple(covered_total / total),
        kind=kind,
        metadata=_mc_metadata(cfg, "none", **extra),
        ci_low=tuple(lo_u),
        ci_high=tuple(hi_u),
    )
    return conditional, unconditional


def _single_orbit(constellation: ConstellationSpec) -> tuple[OrbitGeometry, float]:
    if constellation.n_orbits != 1:
        raise ValueError("this estimator handles a single orbit; use the max-SIR form")
    return constellation.orbits[0], constellation.densities_per_km[0]


def empirical_sir_coverage(
    constellation: ConstellationSpec, thresholds_db, cfg: McConfig
) -> tuple[CoverageCurve, CoverageCurve]:
    """Empirical SIR coverage of a single orbit.

    Returns (conditional on visibility, unconditional). Nakagami figure
    may be any real m >= 0.5 here; only the analytic path needs integers.
    """
    orbit, density = _single_orbit(constellation)
    channel = constellation.channel
    gammas = np.array([db_to_linear(g) for g in thresholds_db])
    rng = RandomSource(cfg.seed)
    covered_cond = np.zeros(gammas.size, dtype=np.int64)
    survivors = 0
    for index, size in enumerate(cfg.batch_sizes()):
        gen = rng.child(index).generator
        nearest, serving, interference = _sir_batch(
            orbit, constellation.window, gen, density, channel.m, channel.alpha, size
        )
        vis = np.isfinite(nearest)
        survivors += int(np.count_nonzero(vis))
        with np.errstate(divide="ignore", invalid="ignore"):
            sir = serving * nearest ** -channel.alpha / (channel.g_i_bar * interference)
        for k, gamma in enumerate(gammas):
            covered_cond[k] += int(np.count_nonzero(vis & (sir > gamma)))
    return _curve_pair(
        thresholds_db, covered_cond, survivors, covered_cond, cfg.trials, "SIR-MC", cfg
    )


def empirical_snr_sinr_coverage(
    constellation: ConstellationSpec, budget: LinkBudget, thresholds_db, cfg: McConfig
) -> tuple[CoverageCurve, CoverageCurve, CoverageCurve, CoverageCurve]:
    """Empirical SNR and SINR coverage of a single orbit under a budget.

    Returns (snr conditional, snr unconditional, sinr conditional,
    sinr unconditional). Distances enter the path loss in meters.
    """
    orbit, density = _single_orbit(constellation)
    channel = constellation.channel
    gammas = np.array([db_to_linear(g) for g in thresholds_db])
    scale = budget.snr_scale
    unit = KM_IN_M ** -channel.alpha
    rng = RandomSource(cfg.seed)
    snr_cond = np.zeros(gammas.size, dtype=np.int64)
    sinr_cond = np.zeros(gammas.size, dtype=np.int64)
    survivors = 0
    for index, size in enumerate(cfg.batch_sizes()):
        gen = rng.child(index).generator
        nearest, serving, interference = _sir_batch(
            orbit, constellation.window, gen, density, channel.m, channel.alpha, size
        )
        vis = np.isfinite(nearest)
        survivors += int(np.count_nonzero(vis))
        signal = np.where(vis, serving * nearest ** -channel.alpha * unit, 0.0)
        noise_term = 1.0 / scale
        sinr = signal / (channel.g_i_bar * interference * unit + noise_term)
        snr = signal * scale
        for k, gamma in enumerate(gammas):
            snr_cond[k] += int(np.count_nonzero(vis & (snr > gamma)))
            sinr_cond[k] += int(np.count_nonzero(vis & (sinr > gamma)))
    extra = {"snr_scale_db": budget.snr_scale_db}
    snr_pair = _curve_pair(thresholds_db, snr_cond, survivors, snr_cond, cfg.trials, "SNR-MC", cfg, **extra)
    sinr_pair = _curve_pair(thresholds_db, sinr_cond, survivors, sinr_cond, cfg.trials, "SINR-MC", cfg, **extra)
    return snr_pair[0], snr_pair[1], sinr_pair[0], sinr_pair[1]


def empirical_max_sir_coverage(
    constellation: ConstellationSpec, thresholds_db, cfg: McConfig
) -> tuple[CoverageCurve, CoverageCurve, CoverageCurve]:
    """Empirical best-satellite SIR coverage over the constellation.

    Returns (conditional on every orbit visible, the same successes over
    all trials, and an any-visible variant). The first two mirror the
    analytic combiner. The third scores the best SIR across whichever
    orbits happen to be visible, over all trials: that is the operational
    quantity a receiver free to skip empty orbits would see, and it has
    no analytic counterpart here.
    """
    channel = constellation.channel
    gammas = np.array([db_to_linear(g) for g in thresholds_db])
    rng = RandomSource(cfg.seed)
    covered_all = np.zeros(gammas.size, dtype=np.int64)
    covered_any = np.zeros(gammas.size, dtype=np.int64)
    survivors = 0
    for index, size in enumerate(cfg.batch_sizes()):
        gen = rng.child(index).generator
        best = np.full(size, -np.inf)
        all_vis = np.ones(size, dtype=bool)
        any_vis = np.zeros(size, dtype=bool)
        for orbit, density in zip(constellation.orbits, constellation.densities_per_km):
            nearest, serving, interference = _sir_batch(
                orbit, constellation.window, gen, density, channel.m, channel.alpha, size
            )
            vis = np.isfinite(nearest)
            with np.errstate(divide="ignore", invalid="ignore"):
                sir = serving * nearest ** -channel.alpha / (channel.g_i_bar * interference)
            best = np.maximum(best, np.where(vis, sir, -np.inf))
            all_vis &= vis
            any_vis |= vis
        survivors += int(np.count_nonzero(all_vis))
        for k, gamma in enumerate(gammas):
            covered_all[k] += int(np.count_nonzero(all_vis & (best > gamma)))
            covered_any[k] += int(np.count_nonzero(any_vis & (best > gamma)))
    conditional, joint = _curve_pair(
        thresholds_db,
        covered_all,
        survivors,
        covered_all,
        cfg.trials,
        "maxSIR-MC",
        cfg,
        n_orbits=constellation.n_orbits,
    )
    lo, hi = _wilson_bounds(covered_any, cfg.trials)
    any_visible = CoverageCurve(
        thresholds_db=tuple(thresholds_db),
        values=tuple(covered_any / cfg.trials),
        kind="maxSIR-MC",
        metadata=_mc_metadata(
            cfg, "any-visible", n_orbits=constellation.n_orbits, analytic_counterpart=False
        ),
        ci_low=tuple(lo),
        ci_high=tuple(hi),
    )
    return conditional, joint, any_visible
