"""Quadrature wrapper and seeded sampling primitives."""

import math

import numpy as np
import pytest
from scipy.special import gamma as gamma_fn

from orbitcov import (
    QuadratureError,
    QuadratureSpec,
    RandomSource,
    integrate,
    sample_fading_power,
    sample_nakagami,
    sample_poisson,
)


class TestIntegrate:
    def test_polynomial_exact(self):
        assert integrate(lambda x: x**3, 0.0, 1.0) == pytest.approx(0.25, abs=1e-12)

    def test_sine_lobe(self):
        assert integrate(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-12)

    def test_empty_interval_short_circuits(self):
        def boom(_):
            raise AssertionError("integrand must not be called")

        assert integrate(boom, 3.0, 3.0) == 0.0

    def test_reversed_bounds_rejected(self):
        with pytest.raises(ValueError):
            integrate(math.sin, 1.0, 0.0)

    def test_failure_carries_estimate(self):
        # one subdivision cannot resolve sin(1/x) near the origin
        spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-14, max_subdivisions=1)
        with pytest.raises(QuadratureError) as err:
            integrate(lambda x: math.sin(1.0 / x), 1e-6, 1.0, spec)
        assert math.isfinite(err.value.estimate)
        assert err.value.error_bound > 0.0

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(rel_tol=0.0)
        with pytest.raises(ValueError):
            QuadratureSpec(abs_tol=-1.0)
        with pytest.raises(ValueError):
            QuadratureSpec(max_subdivisions=0)


class TestRandomSource:
    def test_same_seed_same_stream(self):
        a = RandomSource(42).generator.random(8)
        b = RandomSource(42).generator.random(8)
        assert np.array_equal(a, b)

    def test_children_are_deterministic(self):
        a = RandomSource(42).child(3).generator.random(8)
        b = RandomSource(42).child(3).generator.random(8)
        assert np.array_equal(a, b)

    def test_children_ignore_parent_consumption(self):
        src = RandomSource(42)
        first = src.child(1).generator.random(4)
        src.generator.random(1000)  # burn the parent stream
        again = RandomSource(42)
        again.generator.random(3)
        assert np.array_equal(first, again.child(1).generator.random(4))

    def test_distinct_children_differ(self):
        src = RandomSource(42)
        a = src.child(0).generator.random(8)
        b = src.child(1).generator.random(8)
        assert not np.array_equal(a, b)

    def test_nested_children(self):
        a = RandomSource(7).child(2).child(5).generator.random(4)
        b = RandomSource(7).child(2).child(5).generator.random(4)
        assert np.array_equal(a, b)

    def test_negative_child_index_rejected(self):
        with pytest.raises(ValueError):
            RandomSource(0).child(-1)


class TestPoisson:
    def test_mean_large_sample(self):
        n = 1_000_000
        draws = sample_poisson(50.0, RandomSource(101), size=n)
        # 4 sigma band on the sample mean
        assert abs(draws.mean() - 50.0) < 4.0 * math.sqrt(50.0 / n)

    def test_variance_tracks_mean(self):
        draws = sample_poisson(50.0, RandomSource(102), size=1_000_000)
        assert draws.var() == pytest.approx(50.0, rel=0.02)

    def test_scalar_return(self):
        out = sample_poisson(3.0, RandomSource(1))
        assert isinstance(out, int)

    def test_zero_mean(self):
        assert sample_poisson(0.0, RandomSource(1)) == 0

    def test_negative_mean_rejected(self):
        with pytest.raises(ValueError):
            sample_poisson(-1.0, RandomSource(1))


class TestFading:
    def test_power_is_unit_mean(self):
        for m in (0.5, 1.0, 2.5, 4.0):
            draws = sample_fading_power(m, RandomSource(11), size=1_000_000)
            sigma = math.sqrt(1.0 / m / len(draws))
            assert abs(draws.mean() - 1.0) < 4.0 * sigma

    def test_power_variance(self):
        m = 3.0
        draws = sample_fading_power(m, RandomSource(12), size=1_000_000)
        assert draws.var() == pytest.approx(1.0 / m, rel=0.02)

    def test_amplitude_moments(self):
        # E[H] for the unit power envelope: Gamma(m + 1/2) / (Gamma(m) sqrt(m))
        m = 2.0
        draws = sample_nakagami(m, RandomSource(13), size=1_000_000)
        expect = gamma_fn(m + 0.5) / (gamma_fn(m) * math.sqrt(m))
        sigma = math.sqrt(max(1.0 - expect**2, 0.0) / len(draws))
        assert abs(draws.mean() - expect) < 4.0 * sigma
        assert (draws**2).mean() == pytest.approx(1.0, abs=0.005)

    def test_amplitude_is_sqrt_of_power(self):
        a = sample_nakagami(1.5, RandomSource(14), size=16)
        p = sample_fading_power(1.5, RandomSource(14), size=16)
        assert np.allclose(a, np.sqrt(p), rtol=0.0, atol=0.0)

    def test_scalar_returns(self):
        assert isinstance(sample_fading_power(1.0, RandomSource(2)), float)
        assert isinstance(sample_nakagami(1.0, RandomSource(2)), float)

    def test_shape_figure_floor(self):
        with pytest.raises(ValueError):
            sample_fading_power(0.49, RandomSource(1))
        with pytest.raises(ValueError):
            sample_nakagami(0.0, RandomSource(1))
        sample_fading_power(0.5, RandomSource(1))  # boundary is legal
