"""Augmentation operators, parameter types, and the seeded batch driver."""
from __future__ import annotations

from .batch import augment_array, augment_batch, augment_iter, derive_seed, stack_windows
from .ops import (
    apply_augmentation,
    band_select,
    dominant_shuffle,
    freq_add,
    freq_mask,
    freq_mix,
    freq_noise,
    freq_pool,
    freq_random,
    upsample_aug,
)
from .spec import AugmentSpec, Band, BandPolicy, Method

__all__ = [
    "AugmentSpec",
    "Band",
    "BandPolicy",
    "Method",
    "apply_augmentation",
    "augment_array",
    "augment_batch",
    "augment_iter",
    "band_select",
    "derive_seed",
    "dominant_shuffle",
    "freq_add",
    "freq_mask",
    "freq_mix",
    "freq_noise",
    "freq_pool",
    "freq_random",
    "stack_windows",
    "upsample_aug",
]
