"""Welch PSD estimation and log-log power-law fitting."""

import math

import numpy as np
import pytest

from ramsig import PsdEstimate, default_band, fit_power_law, psd, segment_length_for


def synthetic_psd(segment_length, scale, exponent, noise=None, rng=None):
    """Exact (or multiplicatively noisy) power-law spectrum on a PSD grid."""
    f = np.arange(1, segment_length // 2 + 1) / segment_length
    power = scale * f**exponent
    if noise is not None:
        power = power * np.exp(noise * rng.standard_normal(len(f)))
    return PsdEstimate(frequencies=f, power=power, segment_count=1, window="hann")


class TestPsd:
    def test_pure_cosine_concentrates_in_one_bin(self):
        t = 256
        n = np.arange(1, t + 1)
        x = np.cos(2 * np.pi * n / 8)
        estimate = psd(x, segment_length=t, window="rectangular")
        line = estimate.power[np.argmin(np.abs(estimate.frequencies - 1 / 8))]
        assert estimate.frequencies[np.argmax(estimate.power)] == pytest.approx(1 / 8)
        assert line >= 0.99 * np.sum(estimate.power)

    def test_constant_series_is_silent(self):
        estimate = psd(np.full(512, 3.7), segment_length=128)
        assert np.allclose(estimate.power, 0.0, atol=1e-20)

    def test_white_noise_is_flat(self):
        slopes = []
        for seed in range(20):
            rng = np.random.default_rng(1000 + seed)
            x = rng.standard_normal(2**14)
            estimate = psd(x, segment_length_for(2**14, 8))
            fit = fit_power_law(estimate, 1e-2, float(estimate.frequencies[-1]))
            slopes.append(fit.slope)
        assert abs(np.mean(slopes)) <= 0.1

    def test_window_energy_normalization(self):
        rect_totals = []
        hann_totals = []
        for seed in range(20):
            rng = np.random.default_rng(2000 + seed)
            x = rng.standard_normal(2**14)
            length = segment_length_for(2**14, 8)
            rect_totals.append(np.sum(psd(x, length, window="rectangular").power))
            hann_totals.append(np.sum(psd(x, length, window="hann").power))
        assert np.mean(hann_totals) == pytest.approx(np.mean(rect_totals), rel=0.05)

    def test_scale_equivariance(self):
        rng = np.random.default_rng(42)
        x = rng.standard_normal(4096)
        base = psd(x, 512)
        scaled = psd(7.0 * x, 512)
        assert np.allclose(scaled.power, 49.0 * base.power, rtol=1e-9)
        f_lo, f_hi = default_band(base)
        slope_base = fit_power_law(base, f_lo, f_hi).slope
        slope_scaled = fit_power_law(scaled, f_lo, f_hi).slope
        assert slope_scaled == pytest.approx(slope_base, abs=1e-9)

    def test_frequencies_in_half_open_unit_band(self):
        estimate = psd(np.random.default_rng(5).standard_normal(1000), 100)
        assert estimate.frequencies[0] > 0.0
        assert estimate.frequencies[-1] <= 0.5
        assert np.all(np.diff(estimate.frequencies) > 0)
        assert np.all(estimate.power >= 0.0)

    def test_segment_count(self):
        estimate = psd(np.zeros(1024), 256, overlap_fraction=0.5)
        assert estimate.segment_count == 7

    def test_input_validation(self):
        with pytest.raises(ValueError):
            psd(np.ones(10), 16)  # shorter than one segment
        with pytest.raises(ValueError):
            psd(np.ones(100), 8)  # segment too short
        with pytest.raises(ValueError):
            psd(np.ones(100), 32, window="hamming")
        with pytest.raises(ValueError):
            psd(np.ones(100), 32, overlap_fraction=1.0)


class TestFitPowerLaw:
    def test_exact_inverse_square_recovered(self):
        estimate = synthetic_psd(4096, 1.0, -2.0)
        fit = fit_power_law(estimate, 1e-3, 0.3)
        assert fit.slope == pytest.approx(-2.0, abs=1e-6)
        assert fit.rms_residual < 1e-9

    def test_flat_spectrum(self):
        estimate = synthetic_psd(4096, 2.5, 0.0)
        fit = fit_power_law(estimate, 1e-3, 0.3)
        assert fit.slope == pytest.approx(0.0, abs=0.05)

    def test_noisy_golden_exponent(self):
        slopes = []
        for seed in range(20):
            rng = np.random.default_rng(3000 + seed)
            estimate = synthetic_psd(
                4096, 3.0, -1.236, noise=math.log(1.1), rng=rng
            )
            slopes.append(fit_power_law(estimate, 3e-3, 0.3).slope)
        assert np.mean(slopes) == pytest.approx(-1.236, abs=0.05)
        assert np.max(np.abs(np.asarray(slopes) + 1.236)) < 0.15

    def test_slope_independent_of_grid_density(self):
        slopes = [
            fit_power_law(synthetic_psd(L, 1.0, -1.5), 1e-2, 0.3).slope
            for L in (256, 1024, 4096)
        ]
        assert max(slopes) - min(slopes) < 1e-3

    def test_intercept_matches_scale(self):
        estimate = synthetic_psd(2048, 10.0, -1.0)
        fit = fit_power_law(estimate, 1e-2, 0.3)
        assert fit.intercept == pytest.approx(1.0, abs=1e-6)

    def test_zero_power_bins_are_dropped(self):
        estimate = synthetic_psd(256, 1.0, -1.0)
        power = estimate.power.copy()
        power[10:20] = 0.0
        holey = PsdEstimate(
            frequencies=estimate.frequencies,
            power=power,
            segment_count=1,
            window="hann",
        )
        fit = fit_power_law(holey, float(estimate.frequencies[0]), 0.4)
        assert fit.slope == pytest.approx(-1.0, abs=1e-6)
        assert fit.point_count == np.count_nonzero(power[estimate.frequencies <= 0.4])

    def test_too_few_points(self):
        estimate = synthetic_psd(256, 1.0, -1.0)
        with pytest.raises(ValueError, match="usable points"):
            fit_power_law(estimate, 0.01, 0.02)

    def test_band_outside_range(self):
        estimate = synthetic_psd(256, 1.0, -1.0)
        with pytest.raises(ValueError, match="outside PSD range"):
            fit_power_law(estimate, 1e-6, 0.3)
        with pytest.raises(ValueError, match="outside PSD range"):
            fit_power_law(estimate, 0.01, 0.9)
        with pytest.raises(ValueError):
            fit_power_law(estimate, 0.3, 0.01)

    def test_requires_reasonable_binning(self):
        estimate = synthetic_psd(1024, 1.0, -1.0)
        with pytest.raises(ValueError, match="bins per decade"):
            fit_power_law(estimate, 1e-2, 0.3, bins_per_decade=2)


class TestDefaultBand:
    def test_central_decades(self):
        estimate = synthetic_psd(2**15, 1.0, -1.0)
        f_lo, f_hi = default_band(estimate)
        # guard bins: lowest three excluded, top half-octave excluded
        assert f_lo >= float(estimate.frequencies[3])
        assert f_hi <= float(estimate.frequencies[-1]) / math.sqrt(2.0) * (1 + 1e-12)
        assert math.log10(f_hi / f_lo) == pytest.approx(2.0, abs=1e-9)

    def test_narrow_psd_keeps_usable_band(self):
        estimate = synthetic_psd(64, 1.0, -1.0)
        f_lo, f_hi = default_band(estimate)
        assert float(estimate.frequencies[3]) == pytest.approx(f_lo)
        assert f_lo < f_hi

    def test_used_when_fit_band_omitted(self):
        estimate = synthetic_psd(4096, 1.0, -2.0)
        f_lo, f_hi = default_band(estimate)
        fit = fit_power_law(estimate)
        assert fit.f_min == pytest.approx(f_lo)
        assert fit.f_max == pytest.approx(f_hi)
        assert fit.slope == pytest.approx(-2.0, abs=1e-6)
