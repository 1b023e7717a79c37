"""Operator-level tests: analytic cases, oracle routes, and contracts."""
from __future__ import annotations

import numpy as np
import pytest

from freqaug.augment import (
    AugmentSpec,
    Band,
    BandPolicy,
    Method,
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
from freqaug.errors import (
    ClampedTopKWarning,
    EmptyBandError,
    ParameterError,
    SizeError,
)
from freqaug.spectral import HalfSpectrum
from freqaug.windows import SeriesWindow

from oracles import naive_irdft, naive_rdft, time_domain_energy


def random_window(lookback=96, horizon=96, variates=3, seed=0):
    rng = np.random.default_rng(seed)
    return SeriesWindow(
        history=rng.standard_normal((lookback, variates)),
        future=rng.standard_normal((horizon, variates)),
    )


def spectra(window_like):
    """Per-variate half spectra of a window's concatenation, (M, D)."""
    return np.fft.rfft(window_like.concat(), axis=0)


# ---------------------------------------------------------------- band_select


def _spectrum_from_magnitudes(mags, original_length):
    return HalfSpectrum(
        coefficients=np.asarray(mags, dtype=complex), original_length=original_length
    )


def test_band_select_partition_at_k10():
    # N=30 -> 16 bins, candidates 1..14 (DC and Nyquist out).
    mags = np.arange(16, 0, -1, dtype=float)  # strictly decreasing: 16..1
    spec = _spectrum_from_magnitudes(mags, 30)
    full = band_select(spec, BandPolicy(band=Band.FULL))
    dominant = band_select(spec, BandPolicy(band=Band.DOMINANT, k=10))
    minor = band_select(spec, BandPolicy(band=Band.MINOR))
    assert set(full.indices) == set(range(1, 15))
    assert dominant.indices == tuple(range(1, 11))  # largest magnitudes first
    assert minor.indices == (11, 12, 13, 14)
    assert set(dominant.indices) | set(minor.indices) == set(full.indices)
    assert set(dominant.indices) & set(minor.indices) == set()


def test_band_select_orders_by_descending_magnitude():
    mags = np.array([50.0, 1.0, 9.0, 3.0, 9.0, 7.0, 2.0, 8.0, 6.0, 5.0, 4.0, 1.5, 0.5])
    spec = _spectrum_from_magnitudes(mags, 24)  # candidates 1..11
    full = band_select(spec, BandPolicy(band=Band.FULL))
    got_mags = [mags[i] for i in full.indices]
    assert got_mags == sorted(got_mags, reverse=True)
    assert full.indices[0] == 2  # 9.0 at index 2 beats 9.0 at index 4 by tie-break
    assert full.indices[1] == 4


def test_band_select_minor_empty_on_small_spectrum():
    spec = _spectrum_from_magnitudes(np.ones(5), 8)  # 3 candidates <= 10
    with pytest.raises(EmptyBandError):
        band_select(spec, BandPolicy(band=Band.MINOR))


def test_band_select_dominant_respects_k():
    mags = np.arange(16, 0, -1, dtype=float)
    spec = _spectrum_from_magnitudes(mags, 30)
    assert band_select(spec, BandPolicy(band=Band.DOMINANT, k=3)).indices == (1, 2, 3)


# ----------------------------------------------------------- dominant_shuffle


def shuffle_spec(k=4, **kw):
    return AugmentSpec(method=Method.DOMINANT_SHUFFLE, k=k, **kw)


def test_shuffle_preserves_dominant_multiset_and_rest():
    window = random_window(seed=1)
    spec = shuffle_spec(k=5)
    out = dominant_shuffle(window, spec, np.random.default_rng(42))
    before = spectra(window)
    after = spectra(out)
    m = before.shape[0]
    for d in range(window.n_variates):
        mags = np.abs(before[1:-1, d])  # candidates for even N
        top = np.argsort(-mags, kind="stable")[:5] + 1
        top_set = set(top.tolist())
        rest = [b for b in range(m) if b not in top_set]
        # Untouched bins move only by transform round-trip noise.
        np.testing.assert_allclose(after[rest, d], before[rest, d], atol=1e-12)
        # The dominant coefficients are the same multiset, relocated.
        got = sorted(after[list(top_set), d], key=lambda z: (z.real, z.imag))
        want = sorted(before[list(top_set), d], key=lambda z: (z.real, z.imag))
        np.testing.assert_allclose(got, want, atol=1e-12)


def test_shuffle_preserves_energy_and_realness():
    for seed in range(5):
        window = random_window(lookback=64, horizon=32, variates=2, seed=seed)
        out = dominant_shuffle(window, shuffle_spec(k=6), np.random.default_rng(seed))
        for d in range(2):
            assert time_domain_energy(out.concat()[:, d]) == pytest.approx(
                time_domain_energy(window.concat()[:, d]), rel=1e-8
            )
        assert np.isfinite(out.concat()).all()
        assert out.concat().dtype == np.float64


def test_shuffle_against_naive_transform_oracle():
    # Small window so the O(N^2) oracle is cheap: verify the output series
    # is the naive inverse of a permuted naive forward spectrum.
    rng = np.random.default_rng(9)
    window = SeriesWindow(
        history=rng.standard_normal((20, 1)), future=rng.standard_normal((12, 1))
    )
    out = dominant_shuffle(window, shuffle_spec(k=3), np.random.default_rng(5))
    before = naive_rdft(window.concat()[:, 0])
    after = naive_rdft(out.concat()[:, 0])
    mags = np.abs(before[1:-1])
    top = (np.argsort(-mags, kind="stable")[:3] + 1).tolist()
    rest = [b for b in range(len(before)) if b not in set(top)]
    np.testing.assert_allclose(after[rest], before[rest], atol=1e-9)
    got = sorted(after[top], key=lambda z: (z.real, z.imag))
    want = sorted(before[top], key=lambda z: (z.real, z.imag))
    np.testing.assert_allclose(got, want, atol=1e-9)
    # And the full time series round-trips through the oracle inverse.
    np.testing.assert_allclose(
        out.concat()[:, 0], naive_irdft(after, 32), atol=1e-9
    )


def test_shuffle_k1_is_identity():
    window = random_window(seed=2)
    out = dominant_shuffle(window, shuffle_spec(k=1), np.random.default_rng(0))
    np.testing.assert_allclose(out.concat(), window.concat(), atol=1e-9)


def test_shuffle_constant_window_is_identity():
    window = SeriesWindow(history=np.full((24, 2), 3.5), future=np.full((8, 2), 3.5))
    out = dominant_shuffle(window, shuffle_spec(k=4), np.random.default_rng(0))
    np.testing.assert_allclose(out.concat(), window.concat(), atol=1e-9)


def test_shuffle_actually_relocates_coefficients():
    # Two well-separated sines; with k=2 some seed must swap them.
    t = np.arange(64, dtype=float)
    series = 3.0 * np.sin(2 * np.pi * 3 * t / 64) + 1.0 * np.sin(2 * np.pi * 9 * t / 64)
    window = SeriesWindow(history=series[:48, None], future=series[48:, None])
    before = naive_rdft(series)
    swapped = False
    for seed in range(8):
        out = dominant_shuffle(window, shuffle_spec(k=2), np.random.default_rng(seed))
        after = naive_rdft(out.concat()[:, 0])
        if not np.allclose(after[3], before[3], atol=1e-9):
            np.testing.assert_allclose(after[3], before[9], atol=1e-9)
            np.testing.assert_allclose(after[9], before[3], atol=1e-9)
            swapped = True
            break
    assert swapped, "no seed in range produced a non-identity permutation of 2 bins"


def test_shuffle_shared_permutation_across_variates():
    rng = np.random.default_rng(3)
    base = rng.standard_normal(40)
    values = np.stack([base, 2.0 * base, -0.5 * base], axis=1)
    window = SeriesWindow(history=values[:30], future=values[30:])
    spec = shuffle_spec(k=5, per_variate_independent=False)
    out = dominant_shuffle(window, spec, np.random.default_rng(11))
    got = out.concat()
    # Proportional variates stay proportional only under one shared permutation.
    np.testing.assert_allclose(got[:, 1], 2.0 * got[:, 0], atol=1e-9)
    np.testing.assert_allclose(got[:, 2], -0.5 * got[:, 0], atol=1e-9)


def test_shuffle_clamps_with_warning():
    window = random_window(lookback=6, horizon=2, variates=1, seed=4)  # N=8 -> 3 cands
    with pytest.warns(ClampedTopKWarning):
        out = dominant_shuffle(window, shuffle_spec(k=50), np.random.default_rng(1))
    assert np.isfinite(out.concat()).all()


def test_shuffle_is_deterministic_under_seed():
    window = random_window(seed=6)
    a = dominant_shuffle(window, shuffle_spec(), np.random.default_rng(123))
    b = dominant_shuffle(window, shuffle_spec(), np.random.default_rng(123))
    np.testing.assert_array_equal(a.concat(), b.concat())


# ------------------------------------------------------------------ freq_mask


def test_mask_zeroes_exactly_ceil_rate_bins():
    window = random_window(lookback=60, horizon=40, variates=2, seed=7)  # N=100
    spec = AugmentSpec(method=Method.FREQ_MASK, mask_rate=0.1)
    before = spectra(window)
    assert np.min(np.abs(before[1:-1])) > 1e-6  # no accidental zeros in input
    out = freq_mask(window, spec, np.random.default_rng(2))
    after = spectra(out)
    for d in range(2):
        zeroed = [
            b for b in range(1, 50) if abs(after[b, d]) < 1e-9  # candidates 1..49
        ]
        assert len(zeroed) == 5  # ceil(0.1 * 49)
        untouched = [b for b in range(before.shape[0]) if b not in set(zeroed)]
        np.testing.assert_allclose(after[untouched, d], before[untouched, d], atol=1e-12)


def test_mask_never_increases_energy():
    for seed in range(4):
        window = random_window(lookback=48, horizon=48, variates=3, seed=seed)
        spec = AugmentSpec(method=Method.FREQ_MASK, mask_rate=0.3)
        out = freq_mask(window, spec, np.random.default_rng(seed))
        assert time_domain_energy(out.concat()) <= time_domain_energy(window.concat()) + 1e-9


def test_mask_dominant_band_touches_only_top_bins():
    window = random_window(lookback=96, horizon=96, variates=1, seed=8)
    spec = AugmentSpec(method=Method.FREQ_MASK, band=Band.DOMINANT, k=10, mask_rate=0.1)
    before = spectra(window)
    out = freq_mask(window, spec, np.random.default_rng(3))
    after = spectra(out)
    mags = np.abs(before[1:-1, 0])
    top10 = set((np.argsort(-mags, kind="stable")[:10] + 1).tolist())
    changed = {b for b in range(before.shape[0]) if abs(after[b, 0] - before[b, 0]) > 1e-9}
    assert changed <= top10
    assert len(changed) == 1  # ceil(0.1 * 10)


# ------------------------------------------------------------------- freq_mix


def test_mix_with_self_is_identity():
    window = random_window(seed=10)
    spec = AugmentSpec(method=Method.FREQ_MIX, mask_rate=0.2)
    out = freq_mix(window, window, spec, np.random.default_rng(0))
    np.testing.assert_allclose(out.concat(), window.concat(), atol=1e-9)


def test_mix_takes_partner_coefficients_at_selected_bins():
    a = random_window(lookback=60, horizon=40, variates=2, seed=11)
    b = random_window(lookback=60, horizon=40, variates=2, seed=12)
    spec = AugmentSpec(method=Method.FREQ_MIX, mask_rate=0.1)
    sa, sb = spectra(a), spectra(b)
    out = freq_mix(a, b, spec, np.random.default_rng(4))
    so = spectra(out)
    for d in range(2):
        from_partner = 0
        for k in range(so.shape[0]):
            d_src = abs(so[k, d] - sa[k, d])
            d_par = abs(so[k, d] - sb[k, d])
            assert min(d_src, d_par) < 1e-9  # every bin is from one of the two
            if d_par < 1e-9 and d_src > 1e-6:
                from_partner += 1
        assert from_partner == 5  # ceil(0.1 * 49) swapped in


def test_mix_rejects_mismatched_shapes():
    a = random_window(lookback=32, horizon=16, variates=2, seed=1)
    b = random_window(lookback=32, horizon=8, variates=2, seed=2)
    spec = AugmentSpec(method=Method.FREQ_MIX)
    with pytest.raises(SizeError):
        freq_mix(a, b, spec, np.random.default_rng(0))


# ------------------------------------------------------------------- freq_add


def test_add_sets_half_max_magnitude_in_low_half():
    window = random_window(lookback=60, horizon=36, variates=2, seed=13)  # N=96, M=49
    spec = AugmentSpec(method=Method.FREQ_ADD)
    before = spectra(window)
    out = freq_add(window, spec, np.random.default_rng(5))
    after = spectra(out)
    for d in range(2):
        changed = [
            b for b in range(before.shape[0]) if abs(after[b, d] - before[b, d]) > 1e-9
        ]
        assert len(changed) == 1
        bin_idx = changed[0]
        assert 1 <= bin_idx <= (before.shape[0] - 1) // 2
        max_cand = np.max(np.abs(before[1:-1, d]))
        assert abs(after[bin_idx, d]) == pytest.approx(0.5 * max_cand, abs=1e-9)
        # Phase preserved: the new coefficient is a positive real multiple.
        ratio = after[bin_idx, d] / before[bin_idx, d]
        assert abs(ratio.imag) < 1e-9
        assert ratio.real > 0


def test_add_constant_window_is_identity():
    window = SeriesWindow(history=np.full((12, 1), 2.0), future=np.full((4, 1), 2.0))
    spec = AugmentSpec(method=Method.FREQ_ADD)
    out = freq_add(window, spec, np.random.default_rng(0))
    np.testing.assert_allclose(out.concat(), window.concat(), atol=1e-9)


def test_add_rejects_too_short_window():
    window = SeriesWindow(history=np.ones((2, 1)), future=np.ones((1, 1)))  # N=3, M=2
    with pytest.raises(SizeError):
        freq_add(window, AugmentSpec(method=Method.FREQ_ADD), np.random.default_rng(0))


# ------------------------------------------------------------------ freq_pool


def test_pool_matches_hand_computed_group_maxima():
    # Spectrum [4, 9i, -1, 16, 25] over N=8; pool_size=2 groups are
    # [4,9i] -> max 9, [-1,16] -> max 16, [25] -> 25, phases kept.
    coeffs = np.array([4.0 + 0j, 9.0j, -1.0 + 0j, 16.0 + 0j, 25.0 + 0j])
    series = naive_irdft(coeffs, 8)
    window = SeriesWindow(history=series[:6, None], future=series[6:, None])
    out = freq_pool(window, AugmentSpec(method=Method.FREQ_POOL, pool_size=2))
    after = naive_rdft(out.concat()[:, 0])
    np.testing.assert_allclose(
        after, [9.0 + 0j, 9.0j, -16.0 + 0j, 16.0 + 0j, 25.0 + 0j], atol=1e-9
    )


def test_pool_size_one_is_identity():
    window = random_window(seed=14)
    out = freq_pool(window, AugmentSpec(method=Method.FREQ_POOL, pool_size=1))
    np.testing.assert_allclose(out.concat(), window.concat(), atol=1e-9)


def test_pool_never_decreases_magnitudes():
    window = random_window(lookback=40, horizon=24, variates=2, seed=15)
    before = np.abs(spectra(window))
    out = freq_pool(window, AugmentSpec(method=Method.FREQ_POOL, pool_size=4))
    after = np.abs(spectra(out))
    assert (after >= before - 1e-9).all()


def test_pool_is_deterministic():
    window = random_window(seed=16)
    spec = AugmentSpec(method=Method.FREQ_POOL, pool_size=4)
    np.testing.assert_array_equal(
        freq_pool(window, spec).concat(), freq_pool(window, spec).concat()
    )


def test_pool_group_spanning_whole_spectrum_uses_global_max():
    window = random_window(lookback=20, horizon=12, variates=1, seed=17)
    before = np.abs(spectra(window))
    out = freq_pool(window, AugmentSpec(method=Method.FREQ_POOL, pool_size=64))
    after = np.abs(spectra(out))
    np.testing.assert_allclose(after[:, 0], np.max(before[:, 0]), atol=1e-9)


# ----------------------------------------------------------------- freq_noise


def test_noise_energy_gain_matches_expectation():
    # Monte-Carlo over 10^4 seeds: mean band-energy gain ~= 2 * |band| * std^2.
    rng = np.random.default_rng(18)
    series = rng.standard_normal(16)
    window = SeriesWindow(history=series[:12, None], future=series[12:, None])
    spec = AugmentSpec(method=Method.FREQ_NOISE, sigma=0.5)
    before = naive_rdft(series)
    cands = np.arange(1, 8)  # N=16: candidates 1..7
    std = 0.5 * float(np.mean(np.abs(before[cands])))
    expected = 2.0 * len(cands) * std * std
    gains = np.empty(10_000)
    base_band_energy = float(np.sum(np.abs(before[cands]) ** 2))
    for i in range(10_000):
        out = freq_noise(window, spec, np.random.default_rng(i))
        after = np.fft.rfft(out.concat()[:, 0])
        gains[i] = float(np.sum(np.abs(after[cands]) ** 2)) - base_band_energy
    assert float(np.mean(gains)) == pytest.approx(expected, rel=0.05)


def test_noise_never_touches_dc_or_nyquist():
    window = random_window(lookback=32, horizon=32, variates=2, seed=19)
    spec = AugmentSpec(method=Method.FREQ_NOISE, sigma=2.0)
    before = spectra(window)
    out = freq_noise(window, spec, np.random.default_rng(6))
    after = spectra(out)
    np.testing.assert_allclose(after[0], before[0], atol=1e-12)
    np.testing.assert_allclose(after[-1], before[-1], atol=1e-12)


def test_noise_absolute_sigma_equals_matched_relative_sigma():
    window = random_window(lookback=24, horizon=8, variates=1, seed=20)
    before = spectra(window)
    mean_mag = float(np.mean(np.abs(before[1:-1, 0])))
    rel = AugmentSpec(method=Method.FREQ_NOISE, sigma=0.4)
    absolute = AugmentSpec(
        method=Method.FREQ_NOISE, sigma=0.4 * mean_mag, sigma_is_absolute=True
    )
    out_rel = freq_noise(window, rel, np.random.default_rng(77))
    out_abs = freq_noise(window, absolute, np.random.default_rng(77))
    np.testing.assert_allclose(out_rel.concat(), out_abs.concat(), atol=1e-12)


def test_noise_vanishes_as_sigma_shrinks():
    window = random_window(seed=21)
    spec = AugmentSpec(method=Method.FREQ_NOISE, sigma=1e-12)
    out = freq_noise(window, spec, np.random.default_rng(1))
    np.testing.assert_allclose(out.concat(), window.concat(), atol=1e-9)


# ---------------------------------------------------------------- freq_random


def test_random_magnitudes_stay_within_candidate_range():
    window = random_window(lookback=96, horizon=96, variates=2, seed=22)
    spec = AugmentSpec(method=Method.FREQ_RANDOM, band=Band.FULL)
    before = spectra(window)
    out = freq_random(window, spec, np.random.default_rng(7))
    after = spectra(out)
    for d in range(2):
        cand_mags = np.abs(before[1:-1, d])
        lo, hi = cand_mags.min(), cand_mags.max()
        new_mags = np.abs(after[1:-1, d])
        assert (new_mags >= lo - 1e-9).all()
        assert (new_mags <= hi + 1e-9).all()
        # Phase preserved on every rewritten bin.
        ratios = after[1:-1, d] / before[1:-1, d]
        np.testing.assert_allclose(ratios.imag, 0.0, atol=1e-9)
        assert (ratios.real > 0).all()


def test_random_dominant_band_leaves_minor_bins_alone():
    window = random_window(lookback=96, horizon=96, variates=1, seed=23)
    spec = AugmentSpec(method=Method.FREQ_RANDOM, band=Band.DOMINANT, k=10)
    before = spectra(window)
    out = freq_random(window, spec, np.random.default_rng(8))
    after = spectra(out)
    mags = np.abs(before[1:-1, 0])
    top10 = set((np.argsort(-mags, kind="stable")[:10] + 1).tolist())
    for b in range(before.shape[0]):
        if b not in top10:
            assert abs(after[b, 0] - before[b, 0]) < 1e-12


# ------------------------------------------------------------------- upsample


def test_upsample_ramp_matches_linear_interpolation_analytically():
    n, f = 20, 2
    ramp = np.arange(n, dtype=float)
    values = np.stack([ramp, 3.0 * ramp + 1.0], axis=1)
    window = SeriesWindow(history=values[:15], future=values[15:])
    spec = AugmentSpec(method=Method.UPSAMPLE, upsample_factor=f)
    out = upsample_aug(window, spec, np.random.default_rng(9))
    got = out.concat()
    offset = round(got[0, 0] * f)
    assert 0 <= offset <= n * (f - 1)
    expected = np.minimum((offset + np.arange(n)) / f, n - 1.0)
    np.testing.assert_allclose(got[:, 0], expected, atol=1e-9)
    # Shared offset and affine equivariance of linear interpolation.
    np.testing.assert_allclose(got[:, 1], 3.0 * expected + 1.0, atol=1e-9)


def test_upsample_zero_offset_halves_the_slope():
    # Drive the documented offset-0 case explicitly: interpolating a ramp by
    # f=2 and cropping at 0 yields the first half at half slope.
    n, f = 20, 2
    ramp = np.arange(n, dtype=float)
    window = SeriesWindow(history=ramp[:15, None], future=ramp[15:, None])
    spec = AugmentSpec(method=Method.UPSAMPLE, upsample_factor=f)
    for seed in range(400):
        out = upsample_aug(window, spec, np.random.default_rng(seed))
        if abs(out.concat()[0, 0]) < 1e-12:
            np.testing.assert_allclose(
                out.concat()[:, 0], np.arange(n) / 2.0, atol=1e-9
            )
            return
    pytest.fail("offset 0 never drawn across 400 seeds")


def test_upsample_constant_stays_constant():
    window = SeriesWindow(history=np.full((30, 2), 4.25), future=np.full((10, 2), 4.25))
    spec = AugmentSpec(method=Method.UPSAMPLE, upsample_factor=3)
    out = upsample_aug(window, spec, np.random.default_rng(10))
    np.testing.assert_allclose(out.concat(), 4.25, atol=1e-12)


def test_upsample_never_exceeds_input_extrema():
    for seed in range(6):
        window = random_window(lookback=48, horizon=16, variates=2, seed=seed)
        spec = AugmentSpec(method=Method.UPSAMPLE, upsample_factor=4)
        out = upsample_aug(window, spec, np.random.default_rng(seed))
        for d in range(2):
            src = window.concat()[:, d]
            got = out.concat()[:, d]
            assert got.min() >= src.min() - 1e-12
            assert got.max() <= src.max() + 1e-12


def test_upsample_offsets_cover_their_range():
    n, f = 20, 2
    ramp = np.arange(n, dtype=float)
    window = SeriesWindow(history=ramp[:15, None], future=ramp[15:, None])
    spec = AugmentSpec(method=Method.UPSAMPLE, upsample_factor=f)
    seen = set()
    for seed in range(400):
        out = upsample_aug(window, spec, np.random.default_rng(seed))
        seen.add(round(out.concat()[0, 0] * f))
    assert len(seen) >= 15  # of 21 possible offsets
    assert min(seen) == 0
    assert max(seen) == n * (f - 1)


# ------------------------------------------------------------------- dispatch


def test_apply_augmentation_dispatches_every_method():
    window = random_window(lookback=32, horizon=32, variates=2, seed=24)
    partner = random_window(lookback=32, horizon=32, variates=2, seed=25)
    for method in Method:
        spec = AugmentSpec(method=method)
        out = apply_augmentation(
            window, spec, np.random.default_rng(0), partner=partner
        )
        assert out.provenance.method == method.value
        assert out.concat().shape == window.concat().shape
        assert np.isfinite(out.concat()).all()


def test_apply_augmentation_requires_partner_for_mix():
    window = random_window(seed=26)
    with pytest.raises(SizeError):
        apply_augmentation(
            window, AugmentSpec(method=Method.FREQ_MIX), np.random.default_rng(0)
        )


# ------------------------------------------------------------ spec validation


def test_augment_spec_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.DOMINANT_SHUFFLE, k=0)
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.FREQ_MASK, mask_rate=0.0)
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.FREQ_MASK, mask_rate=1.0)
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.FREQ_NOISE, sigma=0.0)
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.FREQ_POOL, pool_size=0)
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.UPSAMPLE, upsample_factor=1)
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.DOMINANT_SHUFFLE, seed=-1)
    with pytest.raises(ParameterError):
        AugmentSpec(method=Method.DOMINANT_SHUFFLE, seed=2**64)
    with pytest.raises(ParameterError):
        AugmentSpec(method="no_such_method")


def test_augment_spec_params_round_trip():
    spec = AugmentSpec(method=Method.FREQ_MASK, band=Band.MINOR, mask_rate=0.25, seed=99)
    again = AugmentSpec.from_params(spec.to_params())
    assert again == spec
    with pytest.raises(ParameterError):
        AugmentSpec.from_params({"method": "freq_mask", "bogus": 1})
    with pytest.raises(ParameterError):
        AugmentSpec.from_params({"k": 3})


def test_default_bands_per_method():
    assert AugmentSpec(method=Method.DOMINANT_SHUFFLE).resolved_band() is Band.DOMINANT
    assert AugmentSpec(method=Method.FREQ_MASK).resolved_band() is Band.FULL
    assert AugmentSpec(method=Method.FREQ_MIX).resolved_band() is Band.FULL
    assert AugmentSpec(method=Method.FREQ_NOISE).resolved_band() is Band.FULL
    assert AugmentSpec(method=Method.FREQ_RANDOM).resolved_band() is Band.DOMINANT
    assert (
        AugmentSpec(method=Method.FREQ_MASK, band=Band.DOMINANT).resolved_band()
        is Band.DOMINANT
    )
