"""scikit-learn compatible wrappers around the transform layer.

Each estimator treats a 2-D input as a batch of time series, one row
per record, so the transforms compose with pipelines, grid search and
the rest of the ecosystem.  They are stateless apart from input-shape
bookkeeping: ``fit`` validates and resolves defaults, ``transform``
maps rows independently.
"""

import math

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError
from sklearn.utils import check_array

from .arith import build_sieve
from .spectra import fit_power_law, psd, segment_length_for
from .transforms import rft_forward


def _check_batch(X):
    X = check_array(X, dtype=np.float64, ensure_2d=True)
    if not np.all(np.isfinite(X)):
        raise ValueError("records contain NaN or infinite samples")
    if X.shape[1] < 1:
        raise ValueError("records must contain at least one sample")
    return X


class RamanujanTransform(BaseEstimator, TransformerMixin):
    """Row-wise Ramanujan-Fourier transform feature extractor.

    Parameters
    ----------
    q_max : int or None
        Number of coefficients per record; defaults to floor(sqrt(t))
        for records of length t.
    """

    def __init__(self, q_max=None):
        self.q_max = q_max

    def fit(self, X, y=None):
        X = _check_batch(X)
        self.n_features_in_ = X.shape[1]
        self.q_max_ = self.q_max or max(1, math.isqrt(X.shape[1]))
        self.sieve_ = build_sieve(max(2, self.q_max_))
        return self

    def transform(self, X):
        if not hasattr(self, "q_max_"):
            raise NotFittedError("RamanujanTransform is not fitted")
        X = _check_batch(X)
        return np.stack(
            [rft_forward(row, self.q_max_, self.sieve_).coefficients for row in X]
        )


class WelchPsd(BaseEstimator, TransformerMixin):
    """Row-wise Welch power-spectral-density features.

    ``segment_length`` overrides the segment count; otherwise the
    length is derived so ``segments`` overlapping segments cover each
    record.  ``frequencies_`` holds the common frequency grid after
    ``fit``.
    """

    def __init__(self, segment_length=None, segments=8, window="hann", overlap_fraction=0.5):
        self.segment_length = segment_length
        self.segments = segments
        self.window = window
        self.overlap_fraction = overlap_fraction

    def _resolve_length(self, t):
        if self.segment_length is not None:
            return self.segment_length
        return segment_length_for(t, self.segments, self.overlap_fraction)

    def fit(self, X, y=None):
        X = _check_batch(X)
        self.n_features_in_ = X.shape[1]
        self.segment_length_ = self._resolve_length(X.shape[1])
        reference = psd(X[0], self.segment_length_, self.window, self.overlap_fraction)
        self.frequencies_ = reference.frequencies
        return self

    def transform(self, X):
        if not hasattr(self, "segment_length_"):
            raise NotFittedError("WelchPsd is not fitted")
        X = _check_batch(X)
        return np.stack(
            [
                psd(row, self.segment_length_, self.window, self.overlap_fraction).power
                for row in X
            ]
        )


class SpectralSlope(BaseEstimator, TransformerMixin):
    """Power-law exponent features from row-wise Welch spectra.

    Each record maps to (slope, intercept, rms_residual) of the log-log
    fit over [f_min, f_max] (defaulting to the central usable decades),
    which is the compact fingerprint used to classify noise colors.
    """

    def __init__(
        self,
        segment_length=None,
        segments=8,
        window="hann",
        overlap_fraction=0.5,
        f_min=None,
        f_max=None,
        bins_per_decade=8,
    ):
        self.segment_length = segment_length
        self.segments = segments
        self.window = window
        self.overlap_fraction = overlap_fraction
        self.f_min = f_min
        self.f_max = f_max
        self.bins_per_decade = bins_per_decade

    def fit(self, X, y=None):
        X = _check_batch(X)
        self.n_features_in_ = X.shape[1]
        if self.segment_length is not None:
            self.segment_length_ = self.segment_length
        else:
            self.segment_length_ = segment_length_for(
                X.shape[1], self.segments, self.overlap_fraction
            )
        return self

    def transform(self, X):
        if not hasattr(self, "segment_length_"):
            raise NotFittedError("SpectralSlope is not fitted")
        X = _check_batch(X)
        rows = []
        for row in X:
            estimate = psd(row, self.segment_length_, self.window, self.overlap_fraction)
            fit = fit_power_law(
                estimate, self.f_min, self.f_max, bins_per_decade=self.bins_per_decade
            )
            rows.append([fit.slope, fit.intercept, fit.rms_residual])
        return np.asarray(rows)
