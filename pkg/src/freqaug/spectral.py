"""Half-spectrum transforms and dominant-bin selection for real series.

Conventions
-----------
The forward transform is the unnormalized real-input DFT: for a length-N
series it returns the M = floor(N/2) + 1 coefficients

    X_k = sum_n x[n] * exp(-2i * pi * k * n / N),   k = 0 .. floor(N/2).

The inverse applies the 1/N factor and reconstructs the full spectrum by
Hermitian symmetry.  Bin 0 (DC) and, for even N, bin N/2 (Nyquist) must be
real in any spectrum of a real series; their imaginary parts are discarded
on inversion so the output is always exactly real.

The heavy lifting is delegated to numpy's FFT, which implements these exact
conventions; this module owns validation, the half-spectrum container, and
the bin-selection rules built on top.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import ComplexArray, FloatArray, as_complex_array, as_float_array
from .errors import ParameterError, SizeError

__all__ = [
    "HalfSpectrum",
    "CandidatePolicy",
    "BinIndexSet",
    "rfft",
    "irfft",
    "magnitudes",
    "candidate_bins",
    "top_k_bins",
    "parseval_energy",
]

#: Policy-independent floor: a transformable series has at least two samples.
_MIN_LENGTH = 2


@dataclass(frozen=True, slots=True)
class HalfSpectrum:
    """Non-negative-frequency coefficients of a real series.

    Attributes
    ----------
    coefficients : complex ndarray of shape (floor(N/2) + 1,)
    original_length : int
        The time-domain length N.  Kept because even and odd N map to the
        same coefficient count, so N is not recoverable from the array alone.
    """

    coefficients: ComplexArray
    original_length: int

    def __post_init__(self) -> None:
        coeffs = as_complex_array(self.coefficients, name="coefficients")
        n = int(self.original_length)
        if n < _MIN_LENGTH:
            raise SizeError(f"original_length must be >= {_MIN_LENGTH}, got {n}")
        if coeffs.shape[0] != n // 2 + 1:
            raise SizeError(
                f"expected {n // 2 + 1} coefficients for original_length={n}, "
                f"got {coeffs.shape[0]}"
            )
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "original_length", n)

    @property
    def n_bins(self) -> int:
        return self.coefficients.shape[0]

    @property
    def has_nyquist_bin(self) -> bool:
        """True when the final bin is the Nyquist bin (even original length)."""
        return self.original_length % 2 == 0


@dataclass(frozen=True, slots=True)
class CandidatePolicy:
    """Which structurally special bins may be selected for augmentation.

    DC carries the window mean and the Nyquist bin (even lengths only) has
    no free phase, so both are excluded by default; flip the flags to admit
    them.
    """

    include_dc: bool = False
    include_nyquist: bool = False


#: Default selection policy: operate on genuinely oscillatory bins only.
DEFAULT_POLICY = CandidatePolicy()


@dataclass(frozen=True, slots=True)
class BinIndexSet:
    """An ordered selection of distinct bins of some source spectrum.

    ``indices`` are ordered by descending source magnitude with ties broken
    by ascending index.  ``clamped`` is True when a requested k exceeded the
    candidate count and the whole candidate set was returned instead.
    """

    indices: tuple[int, ...]
    clamped: bool = False

    def __post_init__(self) -> None:
        if len(set(self.indices)) != len(self.indices):
            raise ParameterError(f"bin indices must be distinct, got {self.indices}")

    def __len__(self) -> int:
        return len(self.indices)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.indices, dtype=np.intp)


def rfft(series: FloatArray) -> HalfSpectrum:
    """Forward half-spectrum transform of a 1-D real series.

    Parameters
    ----------
    series : ndarray of shape (N,), N >= 2, finite

    Returns
    -------
    HalfSpectrum
        Unnormalized coefficients X_0 .. X_{floor(N/2)}.
    """
    x = as_float_array(series, name="series", ndim=1)
    if x.shape[0] < _MIN_LENGTH:
        raise SizeError(f"series must have at least {_MIN_LENGTH} samples, got {x.shape[0]}")
    return HalfSpectrum(coefficients=np.fft.rfft(x), original_length=x.shape[0])


def irfft(spectrum: HalfSpectrum) -> FloatArray:
    """Inverse of :func:`rfft`, returning a real series of the original length.

    Imaginary parts of DC and (for even lengths) Nyquist are discarded so the
    result is exactly real for any coefficient input.
    """
    coeffs = spectrum.coefficients.copy()
    coeffs[0] = coeffs[0].real
    if spectrum.has_nyquist_bin:
        coeffs[-1] = coeffs[-1].real
    return np.fft.irfft(coeffs, n=spectrum.original_length)


def magnitudes(spectrum: HalfSpectrum) -> FloatArray:
    """Elementwise moduli |X_k| of the spectrum."""
    return np.abs(spectrum.coefficients)


def candidate_bins(
    spectrum: HalfSpectrum, policy: CandidatePolicy = DEFAULT_POLICY
) -> np.ndarray:
    """Indices of bins the policy allows augmentation to touch, ascending."""
    start = 0 if policy.include_dc else 1
    stop = spectrum.n_bins
    if spectrum.has_nyquist_bin and not policy.include_nyquist:
        stop -= 1
    return np.arange(start, stop, dtype=np.intp)


def top_k_bins(
    spectrum: HalfSpectrum, k: int, policy: CandidatePolicy = DEFAULT_POLICY
) -> BinIndexSet:
    """The k candidate bins of largest magnitude.

    Ordered by descending magnitude; equal magnitudes rank by ascending
    index.  When fewer than k candidates exist, every candidate is returned
    and the result is flagged as clamped.

    Raises
    ------
    ParameterError
        If k < 1 or the policy leaves no candidate bins at all.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    cands = candidate_bins(spectrum, policy)
    if cands.size == 0:
        raise ParameterError(
            "candidate set is empty: the spectrum has only DC/Nyquist bins "
            "and the policy excludes both"
        )
    mags = np.abs(spectrum.coefficients[cands])
    # Stable sort on negated magnitudes keeps equal bins in ascending order.
    order = np.argsort(-mags, kind="stable")
    clamped = k > cands.size
    chosen = cands[order[: min(k, cands.size)]]
    return BinIndexSet(indices=tuple(int(i) for i in chosen), clamped=clamped)


def parseval_energy(spectrum: HalfSpectrum) -> float:
    """Time-domain energy sum(x^2) recomputed from the half spectrum.

    For the unnormalized forward transform the identity is
    sum(x^2) = (|X_0|^2 + [N even] |X_{N/2}|^2 + 2 * sum_interior |X_k|^2) / N.
    """
    sq = np.abs(spectrum.coefficients) ** 2
    total = sq[0]
    if spectrum.has_nyquist_bin:
        total += sq[-1]
        total += 2.0 * float(np.sum(sq[1:-1]))
    else:
        total += 2.0 * float(np.sum(sq[1:]))
    return float(total) / spectrum.original_length
