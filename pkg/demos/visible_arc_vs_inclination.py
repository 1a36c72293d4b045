"""How much of an orbit a ground user can see, by inclination.

Sweeps the orbit inclination across the visibility band for a few
minimum elevation angles and prints the visible arc length and the
time a satellite spends inside the window on each pass. The arc is
widest for the orbit passing straight overhead and collapses to zero
once the plane no longer crosses the visibility cap.
"""

import math

from orbitcov import OrbitGeometry, VisibilityWindow, visible_arc_length, visible_time

ALTITUDE_KM = 500.0


def main() -> None:
    reference = OrbitGeometry(ALTITUDE_KM, math.pi / 2)
    print(f"altitude {ALTITUDE_KM:.0f} km, user at the sub-orbit point\n")
    for omega_deg in (0.0, 10.0, 20.0, 40.0):
        window = VisibilityWindow.from_min_elevation(math.radians(omega_deg), reference)
        band_deg = math.degrees(math.acos(window.cap_base_km / reference.radius_km))
        print(f"minimum elevation {omega_deg:.0f} deg "
              f"(visible inclination band: 90 +/- {band_deg:.2f} deg)")
        print(f"  {'theta [deg]':>12} {'arc [km]':>10} {'pass time [s]':>14}")
        for offset_deg in (0.0, 0.25, 0.5, 0.75, 1.0):
            theta = math.pi / 2 + math.radians(offset_deg * band_deg)
            orbit = OrbitGeometry(ALTITUDE_KM, theta)
            arc = visible_arc_length(orbit, window)
            seconds = visible_time(orbit, window) if arc > 0 else 0.0
            print(f"  {math.degrees(theta):>12.2f} {arc:>10.1f} {seconds:>14.1f}")
        print()


if __name__ == "__main__":
    main()
