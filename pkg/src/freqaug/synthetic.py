"""Deterministic synthetic benchmark series.

Used by the test suite and the bundled benchmark when the real CSV files are
not on disk.  Each variate is a sum of daily, half-daily, and weekly
harmonics plus AR(1) noise, then shifted and scaled so the normalizer has
real work to do.  The harmonic/noise variance ratio is chosen so a linear
lag model on z-scored values lands at a realistic test error, and the AR
recursion is exact (scipy lfilter), so generation is reproducible bit for
bit from the seed.
"""
from __future__ import annotations

import csv
import zlib
from datetime import datetime, timedelta
from pathlib import Path

import numpy as np
from scipy.signal import lfilter

from ._validation import check_positive_int
from .errors import ParameterError
from .dataset import RawDataset

__all__ = ["ETT_VARIATES", "make_synthetic_series", "make_ett_like", "write_csv"]

#: Column names used by the ETT-style electricity-transformer files.
ETT_VARIATES = ("HUFL", "HULL", "MUFL", "MULL", "LUFL", "LULL", "OT")

_ETT_SHAPES = {
    # name -> (rows, samples_per_day, minutes_per_step)
    "etth1": (17420, 24, 60),
    "etth2": (17420, 24, 60),
    "ettm1": (69680, 96, 15),
    "ettm2": (69680, 96, 15),
}


def make_synthetic_series(
    *,
    name: str,
    rows: int,
    variate_names: tuple[str, ...],
    seed: int,
    samples_per_day: int = 24,
    noise_ratio: float = 0.55,
    ar_coeff: float = 0.9,
    start: str = "2016-07-01 00:00:00",
    step_minutes: int = 60,
) -> RawDataset:
    """Generate a periodic-plus-AR(1) multivariate series.

    Parameters
    ----------
    noise_ratio : float
        Variance of the AR(1) component relative to the harmonic variance.
        Larger values make the series harder to forecast.
    ar_coeff : float
        AR(1) coefficient in [0, 1); controls how quickly the stochastic
        part decorrelates across forecast steps.
    """
    check_positive_int(rows, name="rows")
    check_positive_int(samples_per_day, name="samples_per_day")
    if not 0.0 <= ar_coeff < 1.0:
        raise ParameterError(f"ar_coeff must be in [0, 1), got {ar_coeff}")
    if noise_ratio < 0.0:
        raise ParameterError(f"noise_ratio must be >= 0, got {noise_ratio}")
    rng = np.random.default_rng(seed)
    t = np.arange(rows, dtype=np.float64)
    period = float(samples_per_day)
    columns = []
    for _ in variate_names:
        a_day = rng.uniform(0.7, 1.3)
        a_half = rng.uniform(0.15, 0.45)
        a_week = rng.uniform(0.25, 0.55)
        ph = rng.uniform(0.0, 2.0 * np.pi, size=3)
        signal = (
            a_day * np.sin(2.0 * np.pi * t / period + ph[0])
            + a_half * np.sin(4.0 * np.pi * t / period + ph[1])
            + a_week * np.sin(2.0 * np.pi * t / (7.0 * period) + ph[2])
        )
        signal_var = (a_day**2 + a_half**2 + a_week**2) / 2.0
        innov_std = np.sqrt(noise_ratio * signal_var * (1.0 - ar_coeff**2))
        innovations = rng.normal(0.0, innov_std, size=rows)
        noise = lfilter([1.0], [1.0, -ar_coeff], innovations)
        offset = rng.uniform(-10.0, 50.0)
        scale = rng.uniform(0.5, 30.0)
        columns.append(offset + scale * (signal + noise))
    values = np.column_stack(columns)
    t0 = datetime.strptime(start, "%Y-%m-%d %H:%M:%S")
    step = timedelta(minutes=step_minutes)
    timestamps = tuple(
        (t0 + i * step).strftime("%Y-%m-%d %H:%M:%S") for i in range(rows)
    )
    return RawDataset(
        name=name, timestamps=timestamps, values=values, variate_names=variate_names
    )


def make_ett_like(name: str, *, seed: int | None = None) -> RawDataset:
    """A synthetic stand-in with the shape and schema of one ETT benchmark file.

    The default seed is derived from the (lowercased) name, so each dataset
    is distinct but stable across runs.
    """
    key = name.lower()
    if key not in _ETT_SHAPES:
        known = ", ".join(sorted(_ETT_SHAPES))
        raise ParameterError(f"unknown ETT-style dataset {name!r}; known: {known}")
    rows, samples_per_day, step_minutes = _ETT_SHAPES[key]
    if seed is None:
        seed = zlib.crc32(key.encode("ascii"))
    return make_synthetic_series(
        name=name,
        rows=rows,
        variate_names=ETT_VARIATES,
        seed=seed,
        samples_per_day=samples_per_day,
        step_minutes=step_minutes,
    )


def write_csv(dataset: RawDataset, path: str | Path) -> Path:
    """Write a dataset in the loader's CSV format (floats via repr, exact)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["date", *dataset.variate_names])
        for ts, row in zip(dataset.timestamps, dataset.values):
            writer.writerow([ts, *(repr(float(v)) for v in row)])
    return path
