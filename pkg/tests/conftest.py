"""Shared fixtures: the reference single-orbit setup used across modules."""

import math

import pytest

from orbitcov import ChannelParams, OrbitGeometry, VisibilityWindow


@pytest.fixture
def ref_orbit() -> OrbitGeometry:
    """Overhead orbit at 500 km."""
    return OrbitGeometry(altitude_km=500.0, theta_rad=math.pi / 2)


@pytest.fixture
def ref_window(ref_orbit) -> VisibilityWindow:
    """10 degree minimum elevation window for the reference orbit."""
    return VisibilityWindow.from_min_elevation(math.radians(10.0), ref_orbit)


@pytest.fixture
def rayleigh() -> ChannelParams:
    return ChannelParams(alpha=2.0, m=1.0)
