"""Scikit-learn style transformer wrappers around the augmentation operators.

Each transformer consumes a batch array of shape (n_windows, length,
n_variates) and returns (n_windows * multiplier, length, n_variates): the
originals first, then seeded augmented copies, exactly as produced by
:func:`freqaug.augment.augment_array`.  The transformers are stateless —
``fit`` only records input shape — so they can be cloned, grid-searched, and
composed like any other estimator.

Constructor parameters are stored verbatim (scikit-learn convention) and
validated at ``transform`` time through :class:`freqaug.augment.AugmentSpec`.
"""
from __future__ import annotations

from typing import ClassVar

from sklearn.base import BaseEstimator, TransformerMixin

from ._validation import FloatArray, check_batch_array
from .augment import AugmentSpec, Method, augment_array

__all__ = [
    "DominantShuffle",
    "FreqMask",
    "FreqMix",
    "FreqAdd",
    "FreqPool",
    "FreqNoise",
    "FreqRandom",
    "Upsample",
]


class _SpectralAugmenter(TransformerMixin, BaseEstimator):
    """Shared plumbing: batch validation, spec assembly, array transform."""

    _method: ClassVar[Method]

    # Subclasses enumerate their constructor parameters explicitly so that
    # BaseEstimator.get_params can introspect them; this base class only
    # provides behavior.

    def _spec_fields(self) -> dict:
        """Constructor params that map straight onto AugmentSpec fields."""
        params = self.get_params(deep=False)
        params.pop("multiplier", None)
        params.pop("lookback", None)
        return params

    def _build_spec(self) -> AugmentSpec:
        return AugmentSpec(method=self._method, **self._spec_fields())

    def fit(self, X, y=None):
        """Record input shape; augmenters learn nothing from data."""
        X = check_batch_array(X)
        self.n_features_in_ = X.shape[2]
        self.window_length_ = X.shape[1]
        return self

    def transform(self, X) -> FloatArray:
        """Return originals plus seeded copies, (n * multiplier, length, d).

        The history/future split position does not change augmented values
        (operators act on the whole window), so when ``lookback`` is None
        the split defaults to length - 1.
        """
        X = check_batch_array(X)
        lookback = self.lookback if self.lookback is not None else X.shape[1] - 1
        return augment_array(X, lookback, self._build_spec(), self.multiplier)


class DominantShuffle(_SpectralAugmenter):
    """Permute each variate's k largest-magnitude frequency coefficients."""

    _method = Method.DOMINANT_SHUFFLE

    def __init__(
        self,
        k=4,
        per_variate_independent=True,
        include_dc=False,
        include_nyquist=False,
        multiplier=2,
        seed=0,
        lookback=None,
    ):
        self.k = k
        self.per_variate_independent = per_variate_independent
        self.include_dc = include_dc
        self.include_nyquist = include_nyquist
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback


class FreqMask(_SpectralAugmenter):
    """Zero a random fraction of band bins per variate."""

    _method = Method.FREQ_MASK

    def __init__(
        self,
        mask_rate=0.1,
        band=None,
        k=4,
        include_dc=False,
        include_nyquist=False,
        multiplier=2,
        seed=0,
        lookback=None,
    ):
        self.mask_rate = mask_rate
        self.band = band
        self.k = k
        self.include_dc = include_dc
        self.include_nyquist = include_nyquist
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback


class FreqMix(_SpectralAugmenter):
    """Swap selected bins with a batch partner's coefficients."""

    _method = Method.FREQ_MIX

    def __init__(
        self,
        mask_rate=0.1,
        band=None,
        k=4,
        include_dc=False,
        include_nyquist=False,
        multiplier=2,
        seed=0,
        lookback=None,
    ):
        self.mask_rate = mask_rate
        self.band = band
        self.k = k
        self.include_dc = include_dc
        self.include_nyquist = include_nyquist
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback


class FreqAdd(_SpectralAugmenter):
    """Boost one random low-frequency bin to half the max magnitude."""

    _method = Method.FREQ_ADD

    def __init__(
        self,
        include_dc=False,
        include_nyquist=False,
        multiplier=2,
        seed=0,
        lookback=None,
    ):
        self.include_dc = include_dc
        self.include_nyquist = include_nyquist
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback


class FreqPool(_SpectralAugmenter):
    """Deterministic max-pooling of magnitudes over bin groups."""

    _method = Method.FREQ_POOL

    def __init__(self, pool_size=4, multiplier=2, seed=0, lookback=None):
        self.pool_size = pool_size
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback


class FreqNoise(_SpectralAugmenter):
    """Gaussian perturbation of band coefficients."""

    _method = Method.FREQ_NOISE

    def __init__(
        self,
        sigma=0.1,
        sigma_is_absolute=False,
        band=None,
        k=4,
        multiplier=2,
        seed=0,
        lookback=None,
    ):
        self.sigma = sigma
        self.sigma_is_absolute = sigma_is_absolute
        self.band = band
        self.k = k
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback


class FreqRandom(_SpectralAugmenter):
    """Rewrite band-bin magnitudes with uniform draws, phases kept."""

    _method = Method.FREQ_RANDOM

    def __init__(
        self,
        band=None,
        k=4,
        include_dc=False,
        include_nyquist=False,
        multiplier=2,
        seed=0,
        lookback=None,
    ):
        self.band = band
        self.k = k
        self.include_dc = include_dc
        self.include_nyquist = include_nyquist
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback


class Upsample(_SpectralAugmenter):
    """Linear time-stretch followed by a random same-length crop."""

    _method = Method.UPSAMPLE

    def __init__(self, upsample_factor=2, multiplier=2, seed=0, lookback=None):
        self.upsample_factor = upsample_factor
        self.multiplier = multiplier
        self.seed = seed
        self.lookback = lookback
