"""Frequency-domain augmentation operators on (history, future) windows.

Every operator works on the concatenation of a window's history and future
segments — the two are augmented as one series so the transform cannot tear
the boundary between them — and splits the result back afterwards.  All
spectral edits happen per variate on the variate's own half spectrum.

Operators that draw randomness take an explicit numpy Generator and document
their draw order, so a caller holding the seed can reproduce any output.
Batch-level seed derivation lives in :mod:`freqaug.augment.batch`.
"""
from __future__ import annotations

import math
import warnings

import numpy as np

from .._validation import FloatArray
from ..errors import ClampedTopKWarning, EmptyBandError, SizeError
from ..spectral import (
    BinIndexSet,
    HalfSpectrum,
    candidate_bins,
    top_k_bins,
)
from ..windows import AugmentedWindow, Provenance, SeriesWindow
from .spec import MINOR_COMPLEMENT_K, AugmentSpec, Band, BandPolicy, Method

__all__ = [
    "band_select",
    "dominant_shuffle",
    "freq_mask",
    "freq_mix",
    "freq_add",
    "freq_pool",
    "freq_noise",
    "freq_random",
    "upsample_aug",
    "apply_augmentation",
]


def band_select(spectrum: HalfSpectrum, policy: BandPolicy) -> BinIndexSet:
    """Select the bins a band policy exposes, ordered like top-k output.

    Full is every candidate bin; dominant is the top ``policy.k`` by
    magnitude; minor is the candidate set minus the top
    ``MINOR_COMPLEMENT_K`` (always 10, whatever ``policy.k`` is).  All three
    orderings are by descending magnitude, ties by ascending index.

    Raises
    ------
    EmptyBandError
        If the minor band is empty, i.e. the spectrum has at most 10
        candidate bins.
    """
    if policy.band is Band.DOMINANT:
        return top_k_bins(spectrum, policy.k, policy.candidates)
    cands = candidate_bins(spectrum, policy.candidates)
    if cands.size == 0:
        raise EmptyBandError("candidate set is empty; nothing to select")
    ranked = top_k_bins(spectrum, cands.size, policy.candidates).indices
    if policy.band is Band.FULL:
        return BinIndexSet(indices=ranked)
    dominant = set(ranked[:MINOR_COMPLEMENT_K])
    minor = tuple(i for i in ranked if i not in dominant)
    if not minor:
        raise EmptyBandError(
            f"minor band is empty: only {cands.size} candidate bins, "
            f"all within the top {MINOR_COMPLEMENT_K}"
        )
    return BinIndexSet(indices=minor)


def _split(concat: FloatArray, lookback: int) -> tuple[FloatArray, FloatArray]:
    return concat[:lookback], concat[lookback:]


def _spectra_of(concat: FloatArray) -> np.ndarray:
    """Half spectra of every variate, shape (n_bins, n_variates)."""
    return np.fft.rfft(concat, axis=0)


def _inverse_of(coeffs: np.ndarray, n: int) -> FloatArray:
    """Inverse transform columnwise, discarding DC/Nyquist imaginary parts."""
    coeffs = coeffs.copy()
    coeffs[0] = coeffs[0].real
    if n % 2 == 0:
        coeffs[-1] = coeffs[-1].real
    return np.fft.irfft(coeffs, n=n, axis=0)


def _variate_spectrum(coeffs: np.ndarray, d: int, n: int) -> HalfSpectrum:
    return HalfSpectrum(coefficients=coeffs[:, d], original_length=n)


def _finish(
    concat: FloatArray,
    window: SeriesWindow,
    method: Method,
    source_id: int,
    seed: int | None,
    partner_id: int | None = None,
) -> AugmentedWindow:
    history, future = _split(concat, window.lookback)
    return AugmentedWindow(
        history=history,
        future=future,
        provenance=Provenance(
            source=source_id, method=method.value, seed=seed, partner=partner_id
        ),
    )


def _unit_phase(values: np.ndarray) -> np.ndarray:
    """values/|values| with zero entries mapped to phase 0 (unit real)."""
    mags = np.abs(values)
    out = np.ones_like(values)
    nonzero = mags > 0.0
    out[nonzero] = values[nonzero] / mags[nonzero]
    return out


def dominant_shuffle(
    window: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    source_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Permute the selected-band coefficients of each variate's spectrum.

    With the default band this permutes the ``spec.k`` largest-magnitude
    candidate bins: whole complex coefficients move between bins, so each
    coefficient keeps its magnitude-phase pairing and the selected multiset
    is preserved exactly.  Identity permutations are legitimate draws.

    Draw order: with ``per_variate_independent`` one permutation per variate
    in variate order; otherwise a single shared permutation, provided every
    variate selected the same number of bins (else it falls back to
    per-variate draws).  A clamped selection (k above the candidate count)
    emits :class:`ClampedTopKWarning` and proceeds with all candidates.
    """
    concat = window.concat()
    n = concat.shape[0]
    coeffs = _spectra_of(concat)
    policy = spec.band_policy()
    index_sets = [
        band_select(_variate_spectrum(coeffs, d, n), policy)
        for d in range(window.n_variates)
    ]
    if any(s.clamped for s in index_sets):
        warnings.warn(
            f"k={spec.k} exceeds the candidate bin count; clamped to "
            f"{len(index_sets[0])} bins",
            ClampedTopKWarning,
            stacklevel=2,
        )
    sizes = {len(s) for s in index_sets}
    shared = not spec.per_variate_independent and len(sizes) == 1
    out = coeffs.copy()
    if shared:
        perm = rng.permutation(len(index_sets[0]))
        perms = [perm] * window.n_variates
    else:
        perms = [rng.permutation(len(s)) for s in index_sets]
    for d, (index_set, perm) in enumerate(zip(index_sets, perms)):
        idx = index_set.as_array()
        out[idx, d] = coeffs[idx[perm], d]
    return _finish(_inverse_of(out, n), window, Method.DOMINANT_SHUFFLE, source_id, seed)


def _mask_count(rate: float, band_size: int) -> int:
    return math.ceil(rate * band_size)


def freq_mask(
    window: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    source_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Zero ceil(mask_rate * |band|) uniformly chosen band bins per variate.

    Draw order: one without-replacement choice per variate, in variate
    order.  Zeroing only removes spectral energy, so the output's energy
    never exceeds the input's.
    """
    concat = window.concat()
    n = concat.shape[0]
    coeffs = _spectra_of(concat)
    policy = spec.band_policy()
    out = coeffs.copy()
    for d in range(window.n_variates):
        band = band_select(_variate_spectrum(coeffs, d, n), policy)
        chosen = rng.choice(band.as_array(), size=_mask_count(spec.mask_rate, len(band)), replace=False)
        out[chosen, d] = 0.0
    return _finish(_inverse_of(out, n), window, Method.FREQ_MASK, source_id, seed)


def freq_mix(
    window: SeriesWindow,
    partner: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    source_id: int = 0,
    partner_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Replace selected bins of the window's spectrum with the partner's.

    Bin selection is exactly :func:`freq_mask`'s (band and count computed on
    the window's own spectrum); the partner only contributes coefficient
    values.  Mixing a window with itself is an identity.
    """
    if partner.history.shape != window.history.shape or partner.future.shape != window.future.shape:
        raise SizeError(
            "partner window shape "
            f"{(partner.lookback, partner.horizon, partner.n_variates)} does not match "
            f"{(window.lookback, window.horizon, window.n_variates)}"
        )
    concat = window.concat()
    n = concat.shape[0]
    coeffs = _spectra_of(concat)
    partner_coeffs = _spectra_of(partner.concat())
    policy = spec.band_policy()
    out = coeffs.copy()
    for d in range(window.n_variates):
        band = band_select(_variate_spectrum(coeffs, d, n), policy)
        chosen = rng.choice(band.as_array(), size=_mask_count(spec.mask_rate, len(band)), replace=False)
        out[chosen, d] = partner_coeffs[chosen, d]
    return _finish(
        _inverse_of(out, n), window, Method.FREQ_MIX, source_id, seed, partner_id=partner_id
    )


def freq_add(
    window: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    source_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Boost one low-frequency bin to half the maximum candidate magnitude.

    Per variate, one bin is drawn uniformly from the low half of the
    spectrum (indices 1 .. floor((M-1)/2), M bins total) and rescaled to
    0.5 * max candidate magnitude with its phase kept; a zero coefficient
    takes phase 0.  Draw order: one integer draw per variate.
    """
    concat = window.concat()
    n = concat.shape[0]
    coeffs = _spectra_of(concat)
    m = coeffs.shape[0]
    high = (m - 1) // 2
    if high < 1:
        raise SizeError(f"window too short for a low-half bin pick: {m} bins")
    cands = candidate_bins(_variate_spectrum(coeffs, 0, n), spec.candidate_policy())
    out = coeffs.copy()
    for d in range(window.n_variates):
        bin_idx = int(rng.integers(1, high + 1))
        target = 0.5 * float(np.max(np.abs(coeffs[cands, d])))
        out[bin_idx, d] = _unit_phase(coeffs[bin_idx : bin_idx + 1, d])[0] * target
    return _finish(_inverse_of(out, n), window, Method.FREQ_ADD, source_id, seed)


def freq_pool(
    window: SeriesWindow,
    spec: AugmentSpec,
    *,
    source_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Deterministic max-pooling of magnitudes over consecutive bin groups.

    The whole spectrum, DC included, is cut into consecutive groups of
    ``pool_size`` bins (last group may be short); every bin's magnitude is
    raised to its group's maximum while the bin keeps its own phase.  No bin
    magnitude ever decreases, and ``pool_size=1`` is an identity.
    """
    concat = window.concat()
    n = concat.shape[0]
    coeffs = _spectra_of(concat)
    m = coeffs.shape[0]
    out = np.empty_like(coeffs)
    for start in range(0, m, spec.pool_size):
        group = coeffs[start : start + spec.pool_size]
        gmax = np.max(np.abs(group), axis=0)
        out[start : start + spec.pool_size] = _unit_phase(group) * gmax
    return _finish(_inverse_of(out, n), window, Method.FREQ_POOL, source_id, seed)


def freq_noise(
    window: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    source_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Gaussian-perturb real and imaginary parts of the selected band.

    Per variate the noise std is ``sigma * mean candidate magnitude``
    (or ``sigma`` itself with ``sigma_is_absolute``).  DC and Nyquist are
    never perturbed regardless of candidate-policy flags.  Draw order: one
    (|band|, 2) standard-normal draw per variate, scaled after drawing.
    """
    concat = window.concat()
    n = concat.shape[0]
    coeffs = _spectra_of(concat)
    # Force the default exclusions: noise must not touch DC or Nyquist.
    policy = BandPolicy(band=spec.resolved_band(), k=spec.k)
    out = coeffs.copy()
    for d in range(window.n_variates):
        spectrum = _variate_spectrum(coeffs, d, n)
        band = band_select(spectrum, policy)
        cands = candidate_bins(spectrum)
        std = spec.sigma if spec.sigma_is_absolute else spec.sigma * float(
            np.mean(np.abs(coeffs[cands, d]))
        )
        draws = rng.standard_normal(size=(len(band), 2))
        idx = band.as_array()
        out[idx, d] = out[idx, d] + std * (draws[:, 0] + 1j * draws[:, 1])
    return _finish(_inverse_of(out, n), window, Method.FREQ_NOISE, source_id, seed)


def freq_random(
    window: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    source_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Rewrite band-bin magnitudes with uniform draws, keeping phases.

    Per variate, each band bin's magnitude is replaced by a uniform draw
    from [min, max] of that variate's candidate magnitudes; the bin keeps
    its phase (phase 0 where the original coefficient was zero).  Draw
    order: one |band|-sized uniform draw per variate.
    """
    concat = window.concat()
    n = concat.shape[0]
    coeffs = _spectra_of(concat)
    policy = spec.band_policy()
    out = coeffs.copy()
    for d in range(window.n_variates):
        spectrum = _variate_spectrum(coeffs, d, n)
        band = band_select(spectrum, policy)
        cands = candidate_bins(spectrum, spec.candidate_policy())
        mags = np.abs(coeffs[cands, d])
        lo, hi = float(np.min(mags)), float(np.max(mags))
        draws = rng.uniform(lo, hi, size=len(band))
        idx = band.as_array()
        out[idx, d] = _unit_phase(coeffs[idx, d]) * draws
    return _finish(_inverse_of(out, n), window, Method.FREQ_RANDOM, source_id, seed)


def upsample_aug(
    window: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    source_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Linearly upsample the window in time and crop back to its length.

    The N-sample concatenation is interpolated onto positions j/f
    (j = 0 .. f*N - 1, clamping past the last sample), then a contiguous
    N-sample crop is taken at a uniformly drawn integer offset in
    [0, N*(f-1)].  One offset draw per window, shared by all variates, so
    cross-variate alignment is preserved.  Values stay inside the input's
    per-variate range because linear interpolation never overshoots.
    """
    concat = window.concat()
    n = concat.shape[0]
    f = spec.upsample_factor
    offset = int(rng.integers(0, n * (f - 1) + 1))
    positions = (offset + np.arange(n, dtype=np.float64)) / f
    grid = np.arange(n, dtype=np.float64)
    out = np.empty_like(concat)
    for d in range(window.n_variates):
        out[:, d] = np.interp(positions, grid, concat[:, d])
    return _finish(out, window, Method.UPSAMPLE, source_id, seed)


#: Dispatch table for single-window methods (freq_mix needs a partner and is
#: handled separately by callers).
_SINGLE_WINDOW_OPS = {
    Method.DOMINANT_SHUFFLE: dominant_shuffle,
    Method.FREQ_MASK: freq_mask,
    Method.FREQ_ADD: freq_add,
    Method.FREQ_NOISE: freq_noise,
    Method.FREQ_RANDOM: freq_random,
    Method.UPSAMPLE: upsample_aug,
}


def apply_augmentation(
    window: SeriesWindow,
    spec: AugmentSpec,
    rng: np.random.Generator,
    *,
    partner: SeriesWindow | None = None,
    source_id: int = 0,
    partner_id: int = 0,
    seed: int | None = None,
) -> AugmentedWindow:
    """Apply the method named by ``spec`` to one window.

    ``partner`` is required for the mixing method and ignored otherwise.
    """
    if spec.method is Method.FREQ_MIX:
        if partner is None:
            raise SizeError("freq_mix requires a partner window")
        return freq_mix(
            window, partner, spec, rng,
            source_id=source_id, partner_id=partner_id, seed=seed,
        )
    if spec.method is Method.FREQ_POOL:
        return freq_pool(window, spec, source_id=source_id, seed=seed)
    op = _SINGLE_WINDOW_OPS[spec.method]
    return op(window, spec, rng, source_id=source_id, seed=seed)
