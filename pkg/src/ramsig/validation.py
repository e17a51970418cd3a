"""Input validation helpers shared by the transform and spectral layers."""

import numpy as np


def check_series(x, allow_complex=False, name="series"):
    """Coerce ``x`` to a validated 1-D sample array.

    Samples are indexed from 1 conceptually: ``out[i]`` is the value at
    time ``n = i + 1``.  Rejects empty input and non-finite entries.
    """
    arr = np.asarray(x)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} is empty")
    if np.iscomplexobj(arr):
        if not allow_complex:
            raise ValueError(f"{name} must be real-valued")
        arr = arr.astype(np.complex128)
    else:
        arr = arr.astype(np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinite samples")
    return arr


def check_positive_int(value, name, minimum=1):
    """Validate an integral parameter, returning it as a plain int."""
    ivalue = int(value)
    if ivalue != value:
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if ivalue < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {ivalue}")
    return ivalue
