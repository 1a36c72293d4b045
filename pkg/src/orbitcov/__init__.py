"""Downlink coverage for LEO constellations whose satellites form
Poisson point processes on inclined circular orbits.

The package splits along the math: `geometry` holds the closed-form
visibility geometry, `distance` the nearest-satellite law, `interference`
the aggregate-interference Laplace transform, `coverage` the SIR/SNR
coverage integrals and the multi-orbit combiner, `montecarlo` the
simulation twins of all of it, and `validation` the acceptance criteria
that hold the two sides together. `cli` wraps the lot for scenario files.
"""

from .coverage import (
    ConstellationSpec,
    CoverageCurve,
    LinkBudget,
    db_to_linear,
    linear_to_db,
    max_sir_coverage,
    max_sir_coverage_conditional,
    max_sir_coverage_curve,
    sir_coverage,
    sir_coverage_conditional,
    sir_coverage_curve,
    snr_coverage,
    snr_coverage_conditional,
    snr_coverage_curve,
    threshold_grid_db,
)
from .distance import (
    NearestDistanceLaw,
    nearest_ccdf,
    nearest_pdf,
    sample_nearest_distance,
)
from .geometry import (
    EarthConstants,
    OrbitGeometry,
    VisibilityWindow,
    arc_to_distance,
    d_min,
    distance_to_arc,
    eta,
    max_orbit_distance,
    orbital_speed,
    visibility_probability,
    visible_arc_length,
    visible_time,
)
from .interference import (
    AntennaModel,
    ChannelParams,
    effective_gains,
    laplace_derivatives,
    log_laplace,
)
from .montecarlo import (
    DegenerateSampleError,
    McConfig,
    SatelliteSnapshot,
    empirical_max_sir_coverage,
    empirical_nearest_ccdf,
    empirical_sir_coverage,
    empirical_snr_sinr_coverage,
    sample_orbit,
)
from .numerics import (
    QuadratureError,
    QuadratureSpec,
    RandomSource,
    integrate,
    sample_fading_power,
    sample_nakagami,
    sample_poisson,
)

__version__ = "0.1.0"

__all__ = [
    "ConstellationSpec",
    "CoverageCurve",
    "LinkBudget",
    "db_to_linear",
    "linear_to_db",
    "max_sir_coverage",
    "max_sir_coverage_conditional",
    "max_sir_coverage_curve",
    "sir_coverage",
    "sir_coverage_conditional",
    "sir_coverage_curve",
    "snr_coverage",
    "snr_coverage_conditional",
    "snr_coverage_curve",
    "threshold_grid_db",
    "NearestDistanceLaw",
    "nearest_ccdf",
    "nearest_pdf",
    "sample_nearest_distance",
    "EarthConstants",
    "OrbitGeometry",
    "VisibilityWindow",
    "arc_to_distance",
    "d_min",
    "distance_to_arc",
    "eta",
    "max_orbit_distance",
    "orbital_speed",
    "visibility_probability",
    "visible_arc_length",
    "visible_time",
    "AntennaModel",
    "ChannelParams",
    "effective_gains",
    "laplace_derivatives",
    "log_laplace",
    "DegenerateSampleError",
    "McConfig",
    "SatelliteSnapshot",
    "empirical_max_sir_coverage",
    "empirical_nearest_ccdf",
    "empirical_sir_coverage",
    "empirical_snr_sinr_coverage",
    "sample_orbit",
    "QuadratureError",
    "QuadratureSpec",
    "RandomSource",
    "integrate",
    "sample_fading_power",
    "sample_nakagami",
    "sample_poisson",
    "__version__",
]
