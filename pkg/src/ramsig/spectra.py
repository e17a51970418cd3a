"""Power spectral density estimation and log-log power-law slope fitting.

The estimator is Welch-style: the record is cut into overlapping
segments, each segment has its mean removed, is windowed, transformed,
and the squared magnitudes are averaged.  The segment mean removal
matters here because summatory error terms carry large slow trends that
would otherwise leak across the whole spectrum.  Frequencies are in
cycles per sample, f in (0, 1/2]; the DC bin is excluded.

Slope fitting works on geometrically binned log-log points: a straight
least-squares line through raw (log f, log S) pairs would be dominated
by the dense high-frequency end, so points are first averaged inside
log-spaced frequency bins.
"""

import math
from dataclasses import dataclass

import numpy as np

from .validation import check_positive_int, check_series

WINDOWS = ("rectangular", "hann")


@dataclass(frozen=True)
class PsdEstimate:
    """One-sided PSD: power at strictly increasing f in (0, 1/2]."""

    frequencies: np.ndarray
    power: np.ndarray
    segment_count: int
    window: str


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares power-law fit S(f) ~ 10**intercept * f**slope."""

    slope: float
    intercept: float
    f_min: float
    f_max: float
    rms_residual: float
    point_count: int


def _window_values(window, length):
    if window == "hann":
        return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(length) / length)
    if window == "rectangular":
        return np.ones(length)
    raise ValueError(f"window must be one of {WINDOWS}, got {window!r}")


def segment_length_for(t, segments=8, overlap_fraction=0.5):
    """Largest segment length giving ``segments`` spans of a length-t record."""
    t = check_positive_int(t, "t")
    segments = check_positive_int(segments, "segments")
    return max(1, int(t / (1.0 + (segments - 1) * (1.0 - overlap_fraction))))


def psd(x, segment_length, window="hann", overlap_fraction=0.5):
    """Welch PSD estimate of a real record.

    Per segment: remove the mean, apply the window, and take
    |DFT|^2 / sum(w^2) at the positive frequencies (for the rectangular
    window the normalization is exactly the segment length).  Segment
    averages are accumulated in a fixed order, so the estimate is
    deterministic.
    """
    a = check_series(x)
    segment_length = check_positive_int(segment_length, "segment_length")
    if segment_length < 16:
        raise ValueError(f"segment_length must be >= 16, got {segment_length}")
    if segment_length > len(a):
        raise ValueError(
            f"series of length {len(a)} is shorter than one segment ({segment_length})"
        )
    if not 0.0 <= overlap_fraction < 1.0:
        raise ValueError(f"overlap_fraction must be in [0, 1), got {overlap_fraction}")
    w = _window_values(window, segment_length)
    w_norm = float(np.sum(w * w))
    step = max(1, int(round(segment_length * (1.0 - overlap_fraction))))
    accum = np.zeros(segment_length // 2, dtype=np.float64)
    count = 0
    for start in range(0, len(a) - segment_length + 1, step):
        segment = a[start : start + segment_length]
        segment = segment - segment.mean()
        spectrum = np.fft.rfft(segment * w)
        accum += np.abs(spectrum[1 : segment_length // 2 + 1]) ** 2 / w_norm
        count += 1
    frequencies = np.arange(1, segment_length // 2 + 1) / segment_length
    return PsdEstimate(
        frequencies=frequencies,
        power=accum / count,
        segment_count=count,
        window=window,
    )


def default_band(estimate, decades=2.0, skip_low_bins=3):
    """Default fitting band: the central ``decades`` of usable frequencies.

    The lowest bins are excluded as trend leakage and the top
    half-octave as window roll-off; if more than ``decades`` remain the
    band is centered geometrically.
    """
    f = estimate.frequencies
    if len(f) <= skip_low_bins + 1:
        raise ValueError("PSD has too few bins for a default band")
    f_lo = float(f[skip_low_bins])
    f_hi = float(f[-1]) / math.sqrt(2.0)
    if f_lo >= f_hi:
        raise ValueError("PSD band collapsed; use longer segments")
    span = math.log10(f_hi) - math.log10(f_lo)
    if span > decades:
        mid = 0.5 * (math.log10(f_hi) + math.log10(f_lo))
        f_lo = 10.0 ** (mid - decades / 2.0)
        f_hi = 10.0 ** (mid + decades / 2.0)
    return f_lo, f_hi


def fit_power_law(estimate, f_min=None, f_max=None, bins_per_decade=8):
    """Fit log10 S = intercept + slope * log10 f over [f_min, f_max].

    Points are averaged inside geometric frequency bins before the
    least-squares line, so the fitted slope does not depend on the
    density of high-frequency points.  Zero-power bins are dropped;
    at least 8 positive points must remain in band.
    """
    if f_min is None or f_max is None:
        band_lo, band_hi = default_band(estimate)
        f_min = band_lo if f_min is None else f_min
        f_max = band_hi if f_max is None else f_max
    f_min = float(f_min)
    f_max = float(f_max)
    if not f_min < f_max:
        raise ValueError(f"need f_min < f_max, got {f_min} >= {f_max}")
    f = estimate.frequencies
    if f_min < f[0] or f_max > f[-1]:
        raise ValueError(
            f"band [{f_min:g}, {f_max:g}] outside PSD range [{f[0]:g}, {f[-1]:g}]"
        )
    if bins_per_decade < 4:
        raise ValueError("need at least 4 bins per decade")
    in_band = (f >= f_min) & (f <= f_max)
    positive = in_band & (estimate.power > 0.0)
    dropped = int(np.count_nonzero(in_band) - np.count_nonzero(positive))
    used = int(np.count_nonzero(positive))
    if used < 8:
        raise ValueError(
            f"only {used} usable points in band ({dropped} zero-power dropped); need 8"
        )
    log_f = np.log10(f[positive])
    log_s = np.log10(estimate.power[positive])
    span = log_f.max() - log_f.min()
    n_bins = max(2, math.ceil(span * bins_per_decade))
    edges = np.linspace(log_f.min(), log_f.max(), n_bins + 1)
    which = np.clip(np.searchsorted(edges, log_f, side="right") - 1, 0, n_bins - 1)
    bin_f = []
    bin_s = []
    for k in range(n_bins):
        members = which == k
        if members.any():
            bin_f.append(log_f[members].mean())
            bin_s.append(log_s[members].mean())
    if len(bin_f) < 2:
        raise ValueError("fewer than 2 nonempty frequency bins; widen the band")
    slope, intercept = np.polyfit(bin_f, bin_s, 1)
    residuals = np.asarray(bin_s) - (intercept + slope * np.asarray(bin_f))
    return PowerLawFit(
        slope=float(slope),
        intercept=float(intercept),
        f_min=f_min,
        f_max=f_max,
        rms_residual=float(np.sqrt(np.mean(residuals**2))),
        point_count=used,
    )
