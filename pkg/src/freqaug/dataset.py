"""Chronological dataset pipeline: CSV loading, splits, scaling, windowing.

The expected file format is a header row (timestamp column first, one column
per variate after it) followed by strictly numeric rows.  Splits are always
chronological.  Known benchmark datasets get their published split row
counts by name; anything else uses floor-based ratio arithmetic with the
remainder assigned to the training split.

Validation and test windows may reach back ``lookback - 1`` rows into the
preceding split for history only, so early evaluation windows exist without
ever letting a window's future rows cross a split boundary.  The z-score
normalizer is fitted on training rows alone.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from ._validation import FloatArray, as_float_array, check_positive_int
from .errors import DataError, ParameterError, ParseError, SizeError
from .windows import SeriesWindow

__all__ = [
    "RawDataset",
    "Normalizer",
    "SplitPolicy",
    "DatasetSplits",
    "WindowSampler",
    "load_csv",
    "split",
    "windows",
    "NAMED_SPLIT_ROWS",
]

#: Published (train, val, test) row counts for the standard benchmarks,
#: keyed by lowercase dataset name.
NAMED_SPLIT_ROWS: dict[str, tuple[int, int, int]] = {
    "etth1": (8545, 2881, 2881),
    "etth2": (8545, 2881, 2881),
    "ettm1": (34465, 11521, 11521),
    "ettm2": (34465, 11521, 11521),
    "exchange": (5120, 665, 1422),
    "weather": (36792, 5271, 10540),
    "electricity": (18317, 2633, 5261),
    "ecl": (18317, 2633, 5261),
    "traffic": (12185, 1757, 3509),
    "pems03": (15617, 5135, 5135),
    "pems04": (10172, 3375, 3375),
    "pems07": (16911, 5622, 5622),
    "pems08": (10690, 3548, 3548),
}

#: A variate whose training-split standard deviation falls below this cannot
#: be z-scored meaningfully.
_MIN_STD = 1e-12


@dataclass(frozen=True)
class RawDataset:
    """An in-memory multivariate series with row timestamps."""

    name: str
    timestamps: tuple[str, ...]
    values: FloatArray  # (rows, n_variates)
    variate_names: tuple[str, ...]

    def __post_init__(self) -> None:
        values = as_float_array(self.values, name="values", ndim=2)
        if values.shape[0] != len(self.timestamps):
            raise SizeError(
                f"{values.shape[0]} rows but {len(self.timestamps)} timestamps"
            )
        if values.shape[1] != len(self.variate_names):
            raise SizeError(
                f"{values.shape[1]} variates but {len(self.variate_names)} names"
            )
        if values.shape[0] < 2:
            raise SizeError("a dataset needs at least 2 rows")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "timestamps", tuple(self.timestamps))
        object.__setattr__(self, "variate_names", tuple(self.variate_names))

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_variates(self) -> int:
        return self.values.shape[1]


def load_csv(path: str | Path, *, name: str | None = None) -> RawDataset:
    """Load a timestamp-plus-variates CSV strictly.

    Any cell that fails to parse raises :class:`ParseError` naming the line
    and column; an empty cell raises :class:`DataError` naming the row and
    column.  The dataset name defaults to the file stem.
    """
    path = Path(path)
    timestamps: list[str] = []
    rows: list[list[float]] = []
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SizeError(f"{path}: file is empty") from None
        if len(header) < 2:
            raise SizeError(f"{path}: need a timestamp column plus at least one variate")
        variate_names = tuple(h.strip() for h in header[1:])
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue  # ignore blank lines
            if len(row) != len(header):
                raise ParseError(
                    f"{path}: line {line_no} has {len(row)} fields, expected {len(header)}"
                )
            timestamps.append(row[0])
            parsed = []
            for col, cell in zip(variate_names, row[1:]):
                cell = cell.strip()
                if cell == "":
                    raise DataError(
                        f"{path}: missing value at row {line_no}, column {col!r}"
                    )
                try:
                    parsed.append(float(cell))
                except ValueError:
                    raise ParseError(
                        f"{path}: cannot parse {cell!r} at line {line_no}, column {col!r}"
                    ) from None
            rows.append(parsed)
    if len(rows) < 2:
        raise SizeError(f"{path}: need at least 2 data rows, got {len(rows)}")
    return RawDataset(
        name=name or path.stem,
        timestamps=tuple(timestamps),
        values=np.asarray(rows, dtype=np.float64),
        variate_names=variate_names,
    )


class Normalizer(TransformerMixin, BaseEstimator):
    """Per-variate z-score scaler fitted on training rows only.

    Population statistics (ddof=0).  A variate with (near-)zero spread on
    the fitted rows raises :class:`DataError` naming the variate.
    """

    def fit(self, X, y=None):
        X = as_float_array(X, name="X", ndim=2)
        mean = X.mean(axis=0)
        std = X.std(axis=0)
        flat = np.flatnonzero(std < _MIN_STD)
        if flat.size:
            raise DataError(
                f"variate(s) {flat.tolist()} are constant on the fitted rows; "
                "z-scoring needs nonzero spread"
            )
        self.mean_ = mean
        self.scale_ = std
        return self

    def _check_fitted(self) -> None:
        if not hasattr(self, "mean_"):
            raise NotFittedError("Normalizer must be fitted before use")

    def transform(self, X) -> FloatArray:
        self._check_fitted()
        X = as_float_array(X, name="X", ndim=2)
        return (X - self.mean_) / self.scale_

    def inverse_transform(self, X) -> FloatArray:
        self._check_fitted()
        X = as_float_array(X, name="X", ndim=2)
        return X * self.scale_ + self.mean_


@dataclass(frozen=True)
class SplitPolicy:
    """How to cut a series into chronological train/val/test ranges."""

    kind: str  # "named" | "ratio" | "explicit"
    ratios: tuple[int, int, int] | None = None
    counts: tuple[int, int, int] | None = None

    @classmethod
    def named(cls) -> "SplitPolicy":
        """Use the published row counts for the dataset's (lowercased) name."""
        return cls(kind="named")

    @classmethod
    def ratio(cls, train: int, val: int, test: int) -> "SplitPolicy":
        for part in (train, val, test):
            check_positive_int(part, name="ratio part")
        return cls(kind="ratio", ratios=(train, val, test))

    @classmethod
    def explicit(cls, train: int, val: int, test: int) -> "SplitPolicy":
        for part in (train, val, test):
            check_positive_int(part, name="split count")
        return cls(kind="explicit", counts=(train, val, test))

    @classmethod
    def parse(cls, value) -> "SplitPolicy":
        """Accept 'named', 'A:B:C' ratio strings, or [train, val, test] counts."""
        if isinstance(value, SplitPolicy):
            return value
        if isinstance(value, str):
            if value == "named":
                return cls.named()
            parts = value.split(":")
            if len(parts) == 3:
                try:
                    return cls.ratio(*(int(p) for p in parts))
                except ValueError:
                    pass
            raise ParameterError(
                f"cannot parse split policy {value!r}; expected 'named' or 'A:B:C'"
            )
        if isinstance(value, (list, tuple)) and len(value) == 3:
            return cls.explicit(*(int(v) for v in value))
        raise ParameterError(f"cannot parse split policy {value!r}")

    def describe(self) -> str:
        if self.kind == "named":
            return "named"
        if self.kind == "ratio":
            return ":".join(str(r) for r in self.ratios)
        return f"explicit{list(self.counts)}"


def _resolve_counts(dataset: RawDataset, policy: SplitPolicy) -> tuple[int, int, int]:
    if policy.kind == "named":
        key = dataset.name.lower()
        if key not in NAMED_SPLIT_ROWS:
            known = ", ".join(sorted(NAMED_SPLIT_ROWS))
            raise ParameterError(
                f"no published split counts for dataset {dataset.name!r}; known: {known}"
            )
        counts = NAMED_SPLIT_ROWS[key]
    elif policy.kind == "ratio":
        a, b, c = policy.ratios
        denom = a + b + c
        val = dataset.rows * b // denom
        test = dataset.rows * c // denom
        counts = (dataset.rows - val - test, val, test)
    elif policy.kind == "explicit":
        counts = policy.counts
    else:
        raise ParameterError(f"unknown split policy kind {policy.kind!r}")
    if sum(counts) > dataset.rows:
        raise SizeError(
            f"split counts {counts} need {sum(counts)} rows but "
            f"{dataset.name!r} has {dataset.rows}"
        )
    if min(counts) < 1:
        raise SizeError(f"every split needs at least one row, got {counts}")
    return counts


@dataclass(frozen=True)
class DatasetSplits:
    """Chronological row ranges plus the train-fitted normalizer."""

    dataset: RawDataset
    policy: SplitPolicy
    train: tuple[int, int]
    val: tuple[int, int]
    test: tuple[int, int]
    normalizer: Normalizer

    def range_for(self, part: str) -> tuple[int, int]:
        try:
            return {"train": self.train, "val": self.val, "test": self.test}[part]
        except KeyError:
            raise ParameterError(
                f"unknown split part {part!r}; expected train, val, or test"
            ) from None

    def normalized_values(self) -> FloatArray:
        """The whole series on the z-scored scale of the training rows."""
        return self.normalizer.transform(self.dataset.values)

    def manifest(self) -> dict:
        """JSON-friendly record of what was split and how it was scaled."""
        return {
            "dataset": self.dataset.name,
            "rows": self.dataset.rows,
            "variates": list(self.dataset.variate_names),
            "policy": self.policy.describe(),
            "ranges": {
                "train": list(self.train),
                "val": list(self.val),
                "test": list(self.test),
            },
            "normalizer": {
                "mean": self.normalizer.mean_.tolist(),
                "std": self.normalizer.scale_.tolist(),
            },
        }


def split(dataset: RawDataset, policy: SplitPolicy | str | list) -> DatasetSplits:
    """Cut the dataset chronologically and fit the normalizer on train rows."""
    policy = SplitPolicy.parse(policy)
    n_train, n_val, n_test = _resolve_counts(dataset, policy)
    train = (0, n_train)
    val = (n_train, n_train + n_val)
    test = (n_train + n_val, n_train + n_val + n_test)
    normalizer = Normalizer().fit(dataset.values[train[0] : train[1]])
    return DatasetSplits(
        dataset=dataset,
        policy=policy,
        train=train,
        val=val,
        test=test,
        normalizer=normalizer,
    )


@dataclass(frozen=True)
class WindowSampler:
    """Window geometry: lookback and horizon lengths plus a row stride."""

    lookback: int
    horizon: int
    stride: int = 1

    def __post_init__(self) -> None:
        check_positive_int(self.lookback, name="lookback")
        check_positive_int(self.horizon, name="horizon")
        check_positive_int(self.stride, name="stride")

    @property
    def length(self) -> int:
        return self.lookback + self.horizon


def windows(
    splits: DatasetSplits,
    part: str,
    sampler: WindowSampler,
    *,
    normalized: bool = True,
) -> list[SeriesWindow]:
    """Sliding windows of one split, count = floor((rows - L - T)/stride) + 1.

    Validation and test ranges are extended backward by ``lookback - 1``
    rows (clamped at row 0) so early windows have history; window futures
    always stay inside the split's own rows.
    """
    start, stop = splits.range_for(part)
    if part != "train":
        start = max(0, start - (sampler.lookback - 1))
    values = splits.normalized_values() if normalized else splits.dataset.values
    block = values[start:stop]
    usable = block.shape[0] - sampler.length
    if usable < 0:
        raise SizeError(
            f"split {part!r} has {block.shape[0]} rows (after extension); too few "
            f"for lookback {sampler.lookback} + horizon {sampler.horizon}"
        )
    count = usable // sampler.stride + 1
    out = []
    for i in range(count):
        s = i * sampler.stride
        out.append(
            SeriesWindow(
                history=block[s : s + sampler.lookback],
                future=block[s + sampler.lookback : s + sampler.length],
            )
        )
    return out
