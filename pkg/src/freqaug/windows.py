"""Window containers shared by the augmentation, dataset, and model layers.

A :class:`SeriesWindow` is one training example: ``history`` is what a model
conditions on, ``future`` is what it must predict.  Augmentations operate on
the concatenation of the two segments and return an :class:`AugmentedWindow`
carrying provenance, so every synthetic example can be traced back to its
source window, method, and seed.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._validation import FloatArray, as_float_array
from .errors import SizeError

__all__ = ["SeriesWindow", "AugmentedWindow", "Provenance"]


def _check_segment(values: object, name: str) -> FloatArray:
    arr = as_float_array(values, name=name, ndim=2)
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise SizeError(f"{name} must have at least one row and one variate, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class SeriesWindow:
    """A (history, future) pair of aligned multivariate segments.

    Attributes
    ----------
    history : ndarray of shape (lookback, n_variates)
    future : ndarray of shape (horizon, n_variates)
    """

    history: FloatArray
    future: FloatArray

    def __post_init__(self) -> None:
        history = _check_segment(self.history, "history")
        future = _check_segment(self.future, "future")
        if history.shape[1] != future.shape[1]:
            raise SizeError(
                "history and future must share a variate count, got "
                f"{history.shape[1]} and {future.shape[1]}"
            )
        object.__setattr__(self, "history", history)
        object.__setattr__(self, "future", future)

    @property
    def lookback(self) -> int:
        return self.history.shape[0]

    @property
    def horizon(self) -> int:
        return self.future.shape[0]

    @property
    def n_variates(self) -> int:
        return self.history.shape[1]

    def concat(self) -> FloatArray:
        """Concatenated (lookback + horizon, n_variates) matrix."""
        return np.concatenate([self.history, self.future], axis=0)


@dataclass(frozen=True)
class Provenance:
    """Where an augmented window came from.

    ``seed`` is the derived per-copy seed when produced by a batch driver and
    ``None`` when the caller supplied its own random generator.  ``partner``
    is set only by mixing operators, which combine two source windows.
    """

    source: int
    method: str
    seed: int | None = None
    partner: int | None = None


@dataclass(frozen=True)
class AugmentedWindow:
    """An augmented (history, future) pair plus its provenance record."""

    history: FloatArray
    future: FloatArray
    provenance: Provenance = field(
        default_factory=lambda: Provenance(source=0, method="unknown")
    )

    def __post_init__(self) -> None:
        history = _check_segment(self.history, "history")
        future = _check_segment(self.future, "future")
        if history.shape[1] != future.shape[1]:
            raise SizeError(
                "history and future must share a variate count, got "
                f"{history.shape[1]} and {future.shape[1]}"
            )
        object.__setattr__(self, "history", history)
        object.__setattr__(self, "future", future)

    @property
    def lookback(self) -> int:
        return self.history.shape[0]

    @property
    def horizon(self) -> int:
        return self.future.shape[0]

    @property
    def n_variates(self) -> int:
        return self.history.shape[1]

    def concat(self) -> FloatArray:
        return np.concatenate([self.history, self.future], axis=0)
