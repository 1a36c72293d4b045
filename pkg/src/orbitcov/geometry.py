"""Closed-form geometry of a circular orbit seen from a fixed ground user.

The user sits at u = (0, 0, R_E) on an Earth sphere of radius R_E. A
satellite orbit is the circle of radius R = R_E + R_h in the plane through
the origin with unit normal v = (sin(theta)cos(phi), sin(theta)sin(phi),
cos(theta)). The sky above the user's minimum elevation angle omega_min
cuts the orbit sphere in a spherical cap; the portion of the orbit inside
that cap is the visible arc, and its length L drives every visibility
statistic downstream (satellite counts, nearest-distance law, coverage).

Everything here reduces to two coordinates:

* the height z of an orbit point above the equatorial plane of the cap
  axis, since the user-to-point distance is r^2 = R^2 + R_E^2 - 2 R_E z
  by the law of cosines, and
* the arc-length coordinate ell = (length of the orbit arc within
  distance r of the user), in which a homogeneous Poisson process on the
  orbit stays homogeneous. `arc_to_distance` / `distance_to_arc` convert
  between the two and are the backbone of all quadrature in this package.

All lengths are kilometers and all angles radians unless a name says
otherwise; `visible_time` and `orbital_speed` convert to meters/seconds
at the boundary, where absolute mechanical quantities live.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi
KM_IN_M = 1000.0

__all__ = [
    "EarthConstants",
    "OrbitGeometry",
    "VisibilityWindow",
    "eta",
    "visible_arc_length",
    "d_min",
    "max_orbit_distance",
    "arc_to_distance",
    "distance_to_arc",
    "visibility_probability",
    "visible_time",
    "orbital_speed",
    "orbit_plane_basis",
]


@dataclass(frozen=True)
class EarthConstants:
    """Planetary constants; defaults are the values used throughout."""

    radius_km: float = 6371.0
    gravitational_constant: float = 6.67259e-11  # m^3 kg^-1 s^-2
    mass_kg: float = 5.9736e24

    def __post_init__(self) -> None:
        if self.radius_km <= 0:
            raise ValueError("Earth radius must be positive")
        if self.gravitational_constant <= 0 or self.mass_kg <= 0:
            raise ValueError("gravitational parameters must be positive")

    @property
    def mu_m3_s2(self) -> float:
        """Standard gravitational parameter G*M in m^3/s^2."""
        return self.gravitational_constant * self.mass_kg


@dataclass(frozen=True)
class OrbitGeometry:
    """One circular orbit: altitude plus the polar/azimuth angles of its
    plane's unit normal. The orbit radius is always derived, never stored."""

    altitude_km: float
    theta_rad: float
    phi_rad: float = 0.0
    earth: EarthConstants = EarthConstants()

    def __post_init__(self) -> None:
        if self.altitude_km <= 0:
            raise ValueError("orbit altitude must be positive")
        if not 0.0 <= self.theta_rad <= math.pi:
            raise ValueError("theta must lie in [0, pi]")
        if not 0.0 <= self.phi_rad < TWO_PI:
            raise ValueError("phi must lie in [0, 2*pi)")

    @property
    def radius_km(self) -> float:
        return self.earth.radius_km + self.altitude_km


@dataclass(frozen=True)
class VisibilityWindow:
    """The spherical cap of the orbit sphere visible above a minimum
    elevation angle.

    cap_base_km is the distance from Earth center to the cap's base plane
    (measured along the user's zenith axis); d_max_km is the largest
    user-to-satellite distance inside the cap, attained on the cap rim.
    """

    omega_min_rad: float
    cap_base_km: float
    d_max_km: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.omega_min_rad < math.pi / 2:
            raise ValueError("minimum elevation must lie in [0, pi/2)")
        if self.d_max_km <= 0 or self.cap_base_km <= 0:
            raise ValueError("window distances must be positive")

    @classmethod
    def from_min_elevation(cls, omega_min_rad: float, orbit: OrbitGeometry) -> "VisibilityWindow":
        """Build the window for one orbit shell from the minimum elevation.

        d_max solves the law-of-cosines triangle user/center/satellite at
        elevation omega_min; the cap base height follows from projecting
        d_max back onto the zenith axis.
        """
        if not 0.0 <= omega_min_rad < math.pi / 2:
            raise ValueError("minimum elevation must lie in [0, pi/2)")
        re = orbit.earth.radius_km
        rh = orbit.altitude_km
        s = re * math.sin(omega_min_rad)
        dmax = -s + math.sqrt(s * s + 2.0 * re * rh + rh * rh)
        cap = dmax * math.sin(omega_min_rad) + re
        # rim height below the orbit radius, at or above the Earth surface
        if not re <= cap < orbit.radius_km:
            raise ValueError("degenerate visibility cap")
        return cls(omega_min_rad=omega_min_rad, cap_base_km=cap, d_max_km=dmax)


def eta(radius_km: float, theta_rad: float, cap_base_km: float, clamp_tol: float = 1e-12):
    """Cosine of the angular extent of the orbit arc inside a spherical cap.

    The cap is the portion of the orbit sphere above the plane at height
    ``cap_base_km`` along the cap axis; when the orbit reaches the cap, the
    intersection arc has length ``radius_km * arccos(eta)``.

    Values within ``clamp_tol`` of +/-1 are clamped so band-edge rounding
    noise cannot leak NaN through arccos; values farther outside are
    returned untouched so callers can detect out-of-band geometry.
    """
    sin_t = math.sin(theta_rad)
    if sin_t == 0.0:
        # orbit plane contains the cap axis only in the degenerate sense;
        # callers must gate on the visibility band before calling
        raise ValueError("eta is undefined for sin(theta) = 0")
    x = cap_base_km / (radius_km * sin_t)
    v = 2.0 * x * x - 1.0
    if abs(v - 1.0) <= clamp_tol:
        return 1.0
    if abs(v + 1.0) <= clamp_tol:
        return -1.0
    return v


def visible_arc_length(orbit: OrbitGeometry, window: VisibilityWindow) -> float:
    """Length (km) of the orbit arc inside the visibility cap.

    Zero whenever the orbit plane is tilted past the band
    |theta - pi/2| <= arccos(cap_base / R); in particular polar-normal
    orbits (theta = 0 or pi) are never visible.
    """
    R = orbit.radius_km
    band = math.acos(window.cap_base_km / R)
    if abs(orbit.theta_rad - math.pi / 2) > band:
        return 0.0
    v = eta(R, orbit.theta_rad, window.cap_base_km)
    return R * math.acos(min(v, 1.0))


def d_min(orbit: OrbitGeometry) -> float:
    """Minimum possible user-to-satellite distance (km) on this orbit."""
    R = orbit.radius_km
    re = orbit.earth.radius_km
    # same operand order as arc_to_distance(0) so the two agree bit-for-bit
    return math.sqrt(R * R + re * re - 2.0 * re * R * math.sin(orbit.theta_rad))


def max_orbit_distance(orbit: OrbitGeometry) -> float:
    """Maximum possible user-to-satellite distance (km) on this orbit."""
    R = orbit.radius_km
    re = orbit.earth.radius_km
    return math.sqrt(R * R + re * re + 2.0 * re * R * math.sin(orbit.theta_rad))


def arc_to_distance(orbit: OrbitGeometry, ell):
    """Distance r (km) such that the orbit arc within distance r has length ell.

    Inverse of `distance_to_arc`. Accepts scalars or arrays with
    0 <= ell <= 2*pi*R; ell = 0 gives d_min, ell = 2*pi*R the far point.
    """
    ell = np.asarray(ell, dtype=float)
    R = orbit.radius_km
    if np.any(ell < 0.0) or np.any(ell > TWO_PI * R):
        raise ValueError("arc length outside [0, 2*pi*R]")
    re = orbit.earth.radius_km
    sin_t = math.sin(orbit.theta_rad)
    r = np.sqrt(R * R + re * re - 2.0 * re * R * sin_t * np.cos(ell / (2.0 * R)))
    return r[()] if r.ndim == 0 else r


def distance_to_arc(orbit: OrbitGeometry, r):
    """Length ell (km) of the orbit arc lying within distance r of the user.

    Inverse of `arc_to_distance` on the geometric range
    [d_min, max_orbit_distance]. Evaluated in the half-angle form
    2R*arccos(h / (R sin theta)) with h the height of the sphere cap of
    radius r around the user, which stays monotone over the whole range
    (the squared form loses h's sign past r^2 = R^2 + R_E^2).
    """
    r = np.asarray(r, dtype=float)
    R = orbit.radius_km
    re = orbit.earth.radius_km
    sin_t = math.sin(orbit.theta_rad)
    if sin_t == 0.0:
        raise ValueError("arc coordinate undefined for sin(theta) = 0")
    h = (R * R + re * re - r * r) / (2.0 * re)
    x = h / (R * sin_t)
    # clamp window mirrors eta's: band-edge rounding only, never real overshoot
    if np.any(np.abs(x) > 1.0 + 1e-12):
        raise ValueError("distance outside the orbit's reachable range")
    ell = 2.0 * R * np.arccos(np.clip(x, -1.0, 1.0))
    return ell[()] if ell.ndim == 0 else ell


def visibility_probability(lambdas, orbits, window: VisibilityWindow) -> float:
    """Probability that at least one satellite is visible across the orbits.

    Satellites form independent Poisson processes with per-orbit densities
    ``lambdas`` (satellites per km), so this is one minus the void
    probability of the union of visible arcs: 1 - exp(-sum_n lambda_n L_n).
    """
    if len(lambdas) != len(orbits):
        raise ValueError("lambdas and orbits must have the same length")
    total = 0.0
    for lam, orbit in zip(lambdas, orbits):
        if lam < 0:
            raise ValueError("densities must be nonnegative")
        total += lam * visible_arc_length(orbit, window)
    return -math.expm1(-total)


def orbital_speed(orbit: OrbitGeometry, earth: EarthConstants | None = None) -> float:
    """Circular-orbit speed sqrt(GM/R) in m/s."""
    earth = earth or orbit.earth
    return math.sqrt(earth.mu_m3_s2 / (orbit.radius_km * KM_IN_M))


def visible_time(orbit: OrbitGeometry, window: VisibilityWindow, earth: EarthConstants | None = None) -> float:
    """Time (s) a satellite spends inside the visibility cap per pass:
    visible arc length divided by orbital speed."""
    earth = earth or orbit.earth
    arc_m = visible_arc_length(orbit, window) * KM_IN_M
    return arc_m / orbital_speed(orbit, earth)


def _scalar_distance_fn(orbit: OrbitGeometry):
    """Fast scalar ell -> r map with the orbit constants folded in.

    Same formula as `arc_to_distance` but built for the hot path inside
    adaptive quadrature, where per-call numpy dispatch would dominate.
    """
    R = orbit.radius_km
    re = orbit.earth.radius_km
    c1 = R * R + re * re
    c2 = 2.0 * re * R * math.sin(orbit.theta_rad)
    half_inv = 1.0 / (2.0 * R)

    def dist(ell: float) -> float:
        return math.sqrt(c1 - c2 * math.cos(ell * half_inv))

    return dist


def orbit_plane_basis(theta_rad: float, phi_rad: float):
    """Orthonormal basis (e1, e2, normal) of the orbit plane.

    The pair (e1, e2) spans the plane through the origin whose unit normal
    is (sin t cos p, sin t sin p, cos t); points on the orbit are
    R*(cos psi * e1 + sin psi * e2). The z-coordinate of such a point is
    -R sin(theta) cos(psi), which is what every height-based shortcut in
    this package relies on.
    """
    st, ct = math.sin(theta_rad), math.cos(theta_rad)
    sp, cp = math.sin(phi_rad), math.cos(phi_rad)
    e1 = np.array([ct * cp, ct * sp, -st])
    e2 = np.array([-sp, cp, 0.0])
    normal = np.array([st * cp, st * sp, ct])
    return e1, e2, normal
