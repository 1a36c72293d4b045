"""SIR, SNR and SINR coverage under a concrete link budget.

With a narrow receiver the link is interference limited (SINR tracks
SIR); widening the bandwidth raises the noise floor until SNR takes
over as the binding constraint. The SINR estimator reuses the exact
same satellite and fading draws as the SIR and SNR ones, so the
orderings here hold sample by sample, not just on average.
"""

import math

from orbitcov import (
    ChannelParams,
    ConstellationSpec,
    LinkBudget,
    McConfig,
    OrbitGeometry,
    VisibilityWindow,
    empirical_sir_coverage,
    empirical_snr_sinr_coverage,
)


def main() -> None:
    orbit = OrbitGeometry(altitude_km=500.0, theta_rad=math.pi / 2)
    window = VisibilityWindow.from_min_elevation(math.radians(10.0), orbit)
    spec = ConstellationSpec(
        orbits=(orbit,),
        densities_per_km=(0.005,),
        window=window,
        channel=ChannelParams(alpha=2.0, m=1.0),
    )
    thresholds = (-5.0, 0.0, 5.0, 10.0)
    cfg = McConfig(trials=100_000, seed=99, batch=25_000)
    sir, _ = empirical_sir_coverage(spec, thresholds, cfg)

    for bandwidth in (1.0e7, 1.0e8, 1.0e9):
        budget = LinkBudget(bandwidth_hz=bandwidth)
        snr, _, sinr, _ = empirical_snr_sinr_coverage(spec, budget, thresholds, cfg)
        print(f"bandwidth {bandwidth:.0e} Hz "
              f"(noise power {budget.noise_power_dbm:.0f} dBm)")
        print(f"  {'gamma [dB]':>10} {'SIR':>7} {'SNR':>7} {'SINR':>7}")
        for i, g in enumerate(thresholds):
            print(f"  {g:>10.0f} {sir.values[i]:>7.4f} {snr.values[i]:>7.4f} "
                  f"{sinr.values[i]:>7.4f}")
        print()


if __name__ == "__main__":
    main()
