"""Shared input-validation helpers.

All helpers raise the typed errors from :mod:`freqaug.errors` and return
float64 C-contiguous views (copying only when dtype or layout requires it).
"""
from __future__ import annotations

import numpy as np
import numpy.typing as npt

from .errors import InvalidInputError, ParameterError, SizeError

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]


def as_float_array(values: object, *, name: str, ndim: int) -> FloatArray:
    """Coerce to a float64 array of exactly ``ndim`` dimensions."""
    try:
        arr = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name} is not numeric: {exc}") from exc
    if arr.ndim != ndim:
        raise SizeError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise InvalidInputError(f"{name} contains NaN or infinite values")
    return np.ascontiguousarray(arr)


def as_complex_array(values: object, *, name: str) -> ComplexArray:
    """Coerce to a 1-D complex128 array with finite entries."""
    try:
        arr = np.asarray(values, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name} is not numeric: {exc}") from exc
    if arr.ndim != 1:
        raise SizeError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise InvalidInputError(f"{name} contains NaN or infinite values")
    return np.ascontiguousarray(arr)


def check_positive_int(value: int, *, name: str) -> int:
    """Require an integer >= 1."""
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ParameterError(f"{name} must be >= 1, got {value}")
    return int(value)


def check_unit_open_interval(value: float, *, name: str) -> float:
    """Require a float strictly inside (0, 1)."""
    value = float(value)
    if not (0.0 < value < 1.0):
        raise ParameterError(f"{name} must lie in (0, 1), got {value}")
    return value


def check_seed(value: int, *, name: str = "seed") -> int:
    """Require an unsigned 64-bit integer seed."""
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    if not (0 <= int(value) < 2**64):
        raise ParameterError(f"{name} must fit in an unsigned 64-bit integer, got {value}")
    return int(value)


def check_batch_array(values: object, *, name: str = "X") -> FloatArray:
    """Coerce a windows batch to float64 of shape (n_windows, length, n_variates)."""
    arr = as_float_array(values, name=name, ndim=3)
    if min(arr.shape) < 1:
        raise SizeError(f"{name} must be non-empty in every dimension, got shape {arr.shape}")
    return arr
