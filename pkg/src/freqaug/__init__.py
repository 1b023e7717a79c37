"""Frequency-domain data augmentation for multivariate time-series forecasting.

The package augments (history, future) training windows by rewriting their
half spectra — permuting dominant coefficients, masking, mixing, pooling, or
perturbing bins — and ships the surrounding pipeline needed to measure the
effect: a chronological dataset loader, a closed-form linear forecaster, and
a config-driven benchmark runner.
"""
from __future__ import annotations

from .augment import (
    AugmentSpec,
    Band,
    Method,
    augment_array,
    augment_batch,
    augment_iter,
    derive_seed,
)
from .errors import (
    ClampedTopKWarning,
    ConfigError,
    DataError,
    EmptyBandError,
    FreqaugError,
    InvalidInputError,
    NumericError,
    ParameterError,
    ParseError,
    SizeError,
)
from .estimators import (
    DominantShuffle,
    FreqAdd,
    FreqMask,
    FreqMix,
    FreqNoise,
    FreqPool,
    FreqRandom,
    Upsample,
)
from .forecaster import Metrics, RidgeForecaster, fit_ridge
from .dataset import Normalizer, RawDataset, SplitPolicy, WindowSampler, load_csv, split, windows
from .windows import AugmentedWindow, Provenance, SeriesWindow

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # augmentation
    "AugmentSpec",
    "Band",
    "Method",
    "augment_array",
    "augment_batch",
    "augment_iter",
    "derive_seed",
    # estimator wrappers
    "DominantShuffle",
    "FreqMask",
    "FreqMix",
    "FreqAdd",
    "FreqPool",
    "FreqNoise",
    "FreqRandom",
    "Upsample",
    # data pipeline
    "RawDataset",
    "Normalizer",
    "SplitPolicy",
    "WindowSampler",
    "load_csv",
    "split",
    "windows",
    "SeriesWindow",
    "AugmentedWindow",
    "Provenance",
    # forecasting
    "RidgeForecaster",
    "Metrics",
    "fit_ridge",
    # errors
    "FreqaugError",
    "InvalidInputError",
    "SizeError",
    "ParameterError",
    "EmptyBandError",
    "DataError",
    "ParseError",
    "ConfigError",
    "NumericError",
    "ClampedTopKWarning",
]
