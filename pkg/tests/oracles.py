"""Independent reference routes used to check the package's numerics.

Everything here is deliberately written the slow, obvious way: explicit
summation DFTs, full sorts, SVD-based least squares, and per-element loops.
None of it may import from freqaug, so a bug in the package cannot hide in
its own test harness.
"""
from __future__ import annotations

import math

import numpy as np


def naive_rdft(series: np.ndarray) -> np.ndarray:
    """O(N^2) real-input DFT by explicit summation.

    Returns the floor(N/2)+1 unnormalized coefficients
    X_k = sum_n x[n] * exp(-2i*pi*k*n/N).
    """
    x = np.asarray(series, dtype=np.float64)
    n = x.shape[0]
    m = n // 2 + 1
    out = np.empty(m, dtype=np.complex128)
    for k in range(m):
        acc = 0.0 + 0.0j
        for t in range(n):
            angle = -2.0 * math.pi * k * t / n
            acc += x[t] * complex(math.cos(angle), math.sin(angle))
        out[k] = acc
    return out


def naive_irdft(coefficients: np.ndarray, n: int) -> np.ndarray:
    """O(N^2) inverse of naive_rdft via explicit Hermitian extension.

    Rebuilds the full-length spectrum (conjugate-mirroring the interior
    bins, using only the real part of DC and, for even n, the Nyquist bin)
    and evaluates x[t] = (1/N) sum_k X_k exp(2i*pi*k*t/N) term by term.
    """
    half = np.asarray(coefficients, dtype=np.complex128)
    full = np.empty(n, dtype=np.complex128)
    full[0] = complex(half[0].real, 0.0)
    if n % 2 == 0:
        full[n // 2] = complex(half[n // 2].real, 0.0)
        interior = range(1, n // 2)
    else:
        interior = range(1, n // 2 + 1)
    for k in interior:
        full[k] = half[k]
        full[n - k] = np.conj(half[k])
    out = np.empty(n, dtype=np.float64)
    for t in range(n):
        acc = 0.0 + 0.0j
        for k in range(n):
            angle = 2.0 * math.pi * k * t / n
            acc += full[k] * complex(math.cos(angle), math.sin(angle))
        out[t] = acc.real / n
    return out


def sort_based_top_k(magnitudes: np.ndarray, k: int, candidates: list[int]) -> list[int]:
    """Full-sort reference for top-k selection.

    Sorts every candidate bin by (descending magnitude, ascending index)
    and returns the first min(k, len(candidates)) indices.
    """
    ranked = sorted(candidates, key=lambda idx: (-float(magnitudes[idx]), idx))
    return ranked[: min(k, len(candidates))]


def ridge_lstsq(design: np.ndarray, targets: np.ndarray, lam: float) -> np.ndarray:
    """Ridge solution via an augmented SVD least-squares problem.

    Stacks sqrt(lam) rows under the design matrix so np.linalg.lstsq solves
    min ||A w - y||^2 + lam * ||w_without_bias||^2 with the final column
    (the bias) left unpenalized.  Independent of the normal-equations route.
    """
    a = np.asarray(design, dtype=np.float64)
    y = np.asarray(targets, dtype=np.float64)
    n_features = a.shape[1]
    penalty = np.sqrt(lam) * np.eye(n_features)
    penalty[-1, -1] = 0.0
    a_aug = np.vstack([a, penalty])
    y_aug = np.vstack([y, np.zeros((n_features, y.shape[1]))])
    solution, *_ = np.linalg.lstsq(a_aug, y_aug, rcond=None)
    return solution


def loop_mse_mae(predictions: np.ndarray, targets: np.ndarray) -> tuple[float, float]:
    """Per-element loop computation of mean squared and absolute error."""
    preds = np.asarray(predictions, dtype=np.float64)
    truth = np.asarray(targets, dtype=np.float64)
    assert preds.shape == truth.shape
    total_sq = 0.0
    total_abs = 0.0
    count = 0
    for idx in np.ndindex(preds.shape):
        diff = float(preds[idx]) - float(truth[idx])
        total_sq += diff * diff
        total_abs += abs(diff)
        count += 1
    return total_sq / count, total_abs / count


def time_domain_energy(series: np.ndarray) -> float:
    """Plain sum of squares of a real series."""
    x = np.asarray(series, dtype=np.float64)
    return float(np.sum(x * x))


def hermitian_energy(coefficients: np.ndarray, n: int) -> float:
    """Time-domain energy recomputed from half-spectrum coefficients.

    Uses the identity sum x^2 = (|X_0|^2 + [n even]|X_{n/2}|^2
    + 2 * sum_{0<k<n/2} |X_k|^2) / n for the unnormalized forward transform.
    """
    half = np.asarray(coefficients, dtype=np.complex128)
    total = abs(half[0]) ** 2
    if n % 2 == 0:
        total += abs(half[-1]) ** 2
        interior = half[1:-1]
    else:
        interior = half[1:]
    total += 2.0 * float(np.sum(np.abs(interior) ** 2))
    return float(total) / n
