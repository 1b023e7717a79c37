"""Channel-independent linear forecaster with ridge regularization.

Every (window, variate) pair contributes one design row: the variate's
lookback values plus an intercept term, mapped to its horizon values.  All
variates share one weight matrix, so the model size is independent of how
many variates a dataset has.

Fitting accumulates the Gram matrix ``G = A^T A`` and cross products
``C = A^T Y`` over design rows in fixed chunks of 1024 rows — window-major,
variate within window — so the floating-point summation order never depends
on dataset size, multiplier, or worker count, and repeated fits are
bit-identical.  The normal equations are solved with a Cholesky
factorization; the intercept column is never penalized.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.exceptions import NotFittedError

from ._validation import FloatArray, as_float_array, check_positive_int
from .errors import NumericError, ParameterError, ParseError, SizeError
from .windows import SeriesWindow

__all__ = ["Metrics", "RidgeForecaster", "fit_ridge", "evaluate_forecasts"]

#: Fixed accumulation chunk size (design rows); part of the determinism
#: contract, do not scale with input size.
CHUNK_ROWS = 1024


@dataclass(frozen=True)
class Metrics:
    """Forecast errors averaged over every (window, step, variate) cell."""

    mse: float
    mae: float
    count: int  # number of windows evaluated


def _window_shapes(windows: Sequence) -> tuple[int, int, int]:
    if len(windows) == 0:
        raise SizeError("need at least one window to fit")
    first = windows[0]
    lookback, n_variates = first.history.shape
    horizon = first.future.shape[0]
    for i, w in enumerate(windows):
        if w.history.shape != (lookback, n_variates) or w.future.shape != (
            horizon,
            n_variates,
        ):
            raise SizeError(
                f"window {i} has shapes {w.history.shape}/{w.future.shape}, "
                f"expected {(lookback, n_variates)}/{(horizon, n_variates)}"
            )
    return lookback, horizon, n_variates


def _design_chunks(
    windows: Sequence, chunk_rows: int
) -> Iterable[tuple[FloatArray, FloatArray]]:
    """Yield (rows, targets) blocks of at most ``chunk_rows`` design rows."""
    buf_a: list[FloatArray] = []
    buf_y: list[FloatArray] = []
    buffered = 0
    for w in windows:
        buf_a.append(np.ascontiguousarray(w.history.T))  # (D, L)
        buf_y.append(np.ascontiguousarray(w.future.T))  # (D, T)
        buffered += buf_a[-1].shape[0]
        while buffered >= chunk_rows:
            a = np.concatenate(buf_a)
            y = np.concatenate(buf_y)
            yield a[:chunk_rows], y[:chunk_rows]
            buf_a, buf_y = [a[chunk_rows:]], [y[chunk_rows:]]
            buffered = buf_a[0].shape[0]
    if buffered:
        yield np.concatenate(buf_a), np.concatenate(buf_y)


def fit_ridge(
    windows: Sequence,
    lam: float = 1e-3,
    *,
    chunk_rows: int = CHUNK_ROWS,
) -> tuple[FloatArray, FloatArray]:
    """Solve the shared-weights ridge problem over all (window, variate) rows.

    Returns
    -------
    weights : ndarray of shape (horizon, lookback)
    bias : ndarray of shape (horizon,)

    Raises
    ------
    NumericError
        If the regularized Gram matrix is not positive definite (typically
        ``lam == 0`` with too few rows); increase ``lam`` above zero.
    """
    if lam < 0:
        raise ParameterError(f"lam must be >= 0, got {lam}")
    check_positive_int(chunk_rows, name="chunk_rows")
    lookback, horizon, _ = _window_shapes(windows)
    n_features = lookback + 1
    gram = np.zeros((n_features, n_features))
    cross = np.zeros((n_features, horizon))
    for rows, targets in _design_chunks(windows, chunk_rows):
        block = np.empty((rows.shape[0], n_features))
        block[:, :lookback] = rows
        block[:, lookback] = 1.0
        gram += block.T @ block
        cross += block.T @ targets
    penalty = lam * np.eye(n_features)
    penalty[lookback, lookback] = 0.0  # intercept stays unpenalized
    try:
        chol = np.linalg.cholesky(gram + penalty)
    except np.linalg.LinAlgError:
        raise NumericError(
            "normal equations are not positive definite; set lam > 0 "
            "or provide more training windows"
        ) from None
    theta = np.linalg.solve(chol.T, np.linalg.solve(chol, cross))
    return np.ascontiguousarray(theta[:lookback].T), theta[lookback].copy()


def evaluate_forecasts(predicted: FloatArray, actual: FloatArray) -> Metrics:
    """Mean squared / absolute error over every (window, step, variate) cell."""
    predicted = as_float_array(predicted, name="predicted", ndim=3)
    actual = as_float_array(actual, name="actual", ndim=3)
    if predicted.shape != actual.shape:
        raise SizeError(
            f"prediction shape {predicted.shape} != actual shape {actual.shape}"
        )
    diff = predicted - actual
    return Metrics(
        mse=float(np.mean(diff**2)),
        mae=float(np.mean(np.abs(diff))),
        count=predicted.shape[0],
    )


class RidgeForecaster(RegressorMixin, BaseEstimator):
    """Ridge-regularized linear map from lookback to horizon, shared by variates.

    Parameters
    ----------
    lookback, horizon : int or None
        Window geometry.  ``None`` infers both from the first fitted window.
    lam : float
        Ridge penalty on the lag weights (never the intercept).

    Attributes
    ----------
    weights_ : ndarray of shape (horizon, lookback)
    bias_ : ndarray of shape (horizon,)
    """

    def __init__(
        self,
        lookback: int | None = None,
        horizon: int | None = None,
        lam: float = 1e-3,
    ):
        self.lookback = lookback
        self.horizon = horizon
        self.lam = lam

    def fit(self, windows: Sequence, y=None):
        lookback, horizon, _ = _window_shapes(windows)
        if self.lookback is not None and self.lookback != lookback:
            raise SizeError(
                f"windows have lookback {lookback}, estimator expects {self.lookback}"
            )
        if self.horizon is not None and self.horizon != horizon:
            raise SizeError(
                f"windows have horizon {horizon}, estimator expects {self.horizon}"
            )
        self.weights_, self.bias_ = fit_ridge(windows, self.lam)
        self.lookback_ = lookback
        self.horizon_ = horizon
        return self

    def _check_fitted(self) -> None:
        if not hasattr(self, "weights_"):
            raise NotFittedError("RidgeForecaster must be fitted before use")

    def _histories(self, windows) -> FloatArray:
        if isinstance(windows, np.ndarray):
            hist = as_float_array(windows, name="histories", ndim=3)
        else:
            hist = np.stack([np.asarray(w.history, dtype=np.float64) for w in windows])
        if hist.shape[1] != self.lookback_:
            raise SizeError(
                f"histories have length {hist.shape[1]}, model expects {self.lookback_}"
            )
        return hist

    def predict(self, windows) -> FloatArray:
        """Forecast each window: (n, horizon, n_variates)."""
        self._check_fitted()
        hist = self._histories(windows)
        out = np.einsum("tl,nld->ntd", self.weights_, hist)
        out += self.bias_[None, :, None]
        return out

    def evaluate(self, windows: Sequence) -> Metrics:
        """Predict the windows and compare against their stored futures."""
        self._check_fitted()
        predicted = self.predict(windows)
        actual = np.stack([np.asarray(w.future, dtype=np.float64) for w in windows])
        return evaluate_forecasts(predicted, actual)

    def save(self, path: str | Path) -> Path:
        """Persist as one flat JSON array: [horizon, lookback, weights…, bias…]."""
        self._check_fitted()
        path = Path(path)
        flat = [
            float(self.horizon_),
            float(self.lookback_),
            *(float(v) for v in self.weights_.ravel()),
            *(float(v) for v in self.bias_),
        ]
        path.write_text(json.dumps(flat))
        return path

    @classmethod
    def load(cls, path: str | Path) -> "RidgeForecaster":
        path = Path(path)
        try:
            flat = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: not valid JSON ({exc})") from None
        if not isinstance(flat, list) or len(flat) < 2:
            raise ParseError(f"{path}: expected a flat JSON array of numbers")
        horizon, lookback = int(flat[0]), int(flat[1])
        expected = 2 + horizon * lookback + horizon
        if horizon < 1 or lookback < 1 or len(flat) != expected:
            raise ParseError(
                f"{path}: expected {expected} values for horizon {horizon} x "
                f"lookback {lookback}, got {len(flat)}"
            )
        body = np.asarray(flat[2:], dtype=np.float64)
        model = cls(lookback=lookback, horizon=horizon)
        model.weights_ = body[: horizon * lookback].reshape(horizon, lookback)
        model.bias_ = body[horizon * lookback :]
        model.lookback_ = lookback
        model.horizon_ = horizon
        return model


def _windows_to_arrays(windows: Sequence) -> tuple[FloatArray, FloatArray]:
    """Stack (histories, futures); handy for callers working with plain arrays."""
    hist = np.stack([np.asarray(w.history, dtype=np.float64) for w in windows])
    fut = np.stack([np.asarray(w.future, dtype=np.float64) for w in windows])
    return hist, fut
