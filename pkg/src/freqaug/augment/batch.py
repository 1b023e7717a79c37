"""Deterministic batch driver: originals plus seeded augmented copies.

Copy c of window i is produced from an RNG seeded by an avalanche hash of
(base seed, i, c).  Nothing depends on processing order, so results are
reproducible bit-for-bit across runs, across processes, and under any
parallel execution of the batch.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .._validation import FloatArray, check_batch_array, check_positive_int, check_seed
from ..errors import ParameterError, SizeError
from ..windows import AugmentedWindow, Provenance, SeriesWindow
from .ops import apply_augmentation, freq_mix
from .spec import AugmentSpec, Method

__all__ = ["derive_seed", "augment_batch", "augment_iter", "augment_array"]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(state: int) -> int:
    """One SplitMix64 step: advance by the golden gamma and finalize."""
    state = (state + _GOLDEN) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, *parts: int) -> int:
    """Avalanche-hash a base seed with integer parts into a fresh 64-bit seed.

    Each part is finalized independently and folded in, so (seed, i, c)
    triples that differ in any component land far apart.  Used to give copy
    c of window i its own RNG stream independent of batch order.
    """
    state = check_seed(base_seed, name="base_seed")
    state = _splitmix64(state)
    for part in parts:
        if part < 0:
            raise ParameterError(f"seed parts must be non-negative, got {part}")
        state = _splitmix64(state ^ _splitmix64(int(part) & _MASK64))
    return state


def _check_uniform(windows: Sequence[SeriesWindow]) -> None:
    if len(windows) == 0:
        raise SizeError("windows must be non-empty")
    first = windows[0]
    shape = (first.lookback, first.horizon, first.n_variates)
    for i, w in enumerate(windows):
        if (w.lookback, w.horizon, w.n_variates) != shape:
            raise SizeError(
                f"window {i} has shape {(w.lookback, w.horizon, w.n_variates)}, "
                f"expected {shape} like window 0"
            )


def augment_iter(
    windows: Sequence[SeriesWindow],
    spec: AugmentSpec,
    size_multiplier: int = 2,
) -> Iterator[AugmentedWindow]:
    """Yield originals, then one full pass of copies per extra multiple.

    Output order: windows 0..n-1 unchanged (copy 0), then for each copy
    index c in 1..multiplier-1 the augmented windows 0..n-1.  Copy c of
    window i uses an RNG seeded with derive_seed(spec.seed, i, c); the
    mixing method draws its partner j != i from that RNG first.
    """
    multiplier = check_positive_int(size_multiplier, name="size_multiplier")
    _check_uniform(windows)
    n = len(windows)
    for i, w in enumerate(windows):
        yield AugmentedWindow(
            history=w.history,
            future=w.future,
            provenance=Provenance(source=i, method="original", seed=None),
        )
    for copy in range(1, multiplier):
        for i, w in enumerate(windows):
            seed = derive_seed(spec.seed, i, copy)
            rng = np.random.default_rng(seed)
            if spec.method is Method.FREQ_MIX:
                if n > 1:
                    j = int(rng.integers(0, n - 1))
                    if j >= i:
                        j += 1
                else:
                    j = i  # single-window batch: self-mix is an identity
                yield freq_mix(
                    w, windows[j], spec, rng, source_id=i, partner_id=j, seed=seed
                )
            else:
                yield apply_augmentation(w, spec, rng, source_id=i, seed=seed)


def augment_batch(
    windows: Sequence[SeriesWindow],
    spec: AugmentSpec,
    size_multiplier: int = 2,
) -> list[AugmentedWindow]:
    """Materialized :func:`augment_iter`: n * multiplier windows, originals first."""
    return list(augment_iter(windows, spec, size_multiplier))


def augment_array(
    data: FloatArray,
    lookback: int,
    spec: AugmentSpec,
    size_multiplier: int = 2,
) -> FloatArray:
    """Array-in, array-out batch augmentation.

    Parameters
    ----------
    data : ndarray of shape (n_windows, length, n_variates)
        Each row along axis 0 is one window's concatenated history+future.
    lookback : int
        History length; 1 <= lookback < length.

    Returns
    -------
    ndarray of shape (n_windows * size_multiplier, length, n_variates)
        Same layout and ordering as :func:`augment_iter`.  The input array
        is never mutated.
    """
    batch = check_batch_array(data, name="data")
    n, length, _ = batch.shape
    lookback = check_positive_int(lookback, name="lookback")
    if lookback >= length:
        raise SizeError(
            f"lookback must leave at least one future row: lookback={lookback}, "
            f"window length={length}"
        )
    windows = [
        SeriesWindow(history=batch[i, :lookback], future=batch[i, lookback:])
        for i in range(n)
    ]
    multiplier = check_positive_int(size_multiplier, name="size_multiplier")
    out = np.empty((n * multiplier, length, batch.shape[2]), dtype=np.float64)
    for pos, aug in enumerate(augment_iter(windows, spec, multiplier)):
        out[pos, :lookback] = aug.history
        out[pos, lookback:] = aug.future
    return out


def stack_windows(windows: Iterable[SeriesWindow | AugmentedWindow]) -> FloatArray:
    """Stack windows into a (count, length, n_variates) array."""
    mats = [w.concat() for w in windows]
    if not mats:
        raise SizeError("windows must be non-empty")
    return np.stack(mats, axis=0)
