"""Strict JSON experiment configuration.

Every level rejects unknown keys, so a typo fails the run up front instead
of silently falling back to a default.  The documented shape:

.. code-block:: json

    {
      "dataset": {"synthetic": "ETTh1", "split": "named"},
      "lookback": 96,
      "horizons": [96, 192],
      "methods": [{"method": "dominant_shuffle", "k": 4}],
      "size_multipliers": [2],
      "seeds": [0, 1, 2, 3, 4],
      "k_sweep": [1, 2, 3],
      "auto_k": false,
      "model": {"ridge": {"lam": 0.001}},
      "output": {"path": "results.csv", "format": "csv"}
    }

``dataset`` takes either ``"path"`` (a CSV on disk) or ``"synthetic"`` (a
bundled generator name such as ``ETTh1``), plus optional ``"name"`` and
``"split"`` (``"named"``, an ``"A:B:C"`` ratio, or explicit ``[train, val,
test]`` row counts).  ``k_sweep`` expands every dominant-shuffle method
into one grid entry per listed k.  With ``auto_k`` the list (default
``[1, 2, 3, 4, 5, 8, 10]``) becomes the candidate set searched on the
validation split instead; the two options are mutually exclusive.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..augment import AugmentSpec
from ..errors import ConfigError, ParameterError

__all__ = [
    "DEFAULT_K_SWEEP",
    "DatasetSource",
    "ModelConfig",
    "OutputConfig",
    "ExperimentConfig",
    "parse_config",
    "load_config",
]

#: Default candidate list for tuning k on the validation split.
DEFAULT_K_SWEEP = (1, 2, 3, 4, 5, 8, 10)

_DEFAULT_HORIZONS = (96, 192, 336, 720)
_DEFAULT_SEEDS = (0, 1, 2, 3, 4)


def _check_keys(obj: dict, known: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ConfigError(f"{where} must be a JSON object, got {type(obj).__name__}")
    unknown = set(obj) - known
    if unknown:
        raise ConfigError(
            f"unknown key(s) {sorted(unknown)} in {where}; known: {sorted(known)}"
        )


def _int(value, where: str, *, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where} must be an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"{where} must be >= {minimum}, got {value}")
    return value


def _int_list(value, where: str, *, minimum: int = 1) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{where} must be a non-empty list of integers")
    return tuple(_int(v, f"{where} entry", minimum=minimum) for v in value)


@dataclass(frozen=True)
class DatasetSource:
    """Where the series comes from: a CSV path or a bundled synthetic name."""

    kind: str  # "path" | "synthetic"
    value: str
    name: str | None = None
    split: str | tuple[int, int, int] = "named"

    @classmethod
    def parse(cls, obj) -> "DatasetSource":
        _check_keys(obj, {"path", "synthetic", "name", "split"}, "dataset")
        has_path = "path" in obj
        has_synth = "synthetic" in obj
        if has_path == has_synth:
            raise ConfigError("dataset needs exactly one of 'path' or 'synthetic'")
        split = obj.get("split", "named")
        if isinstance(split, list):
            split = tuple(_int(v, "dataset.split entry") for v in split)
            if len(split) != 3:
                raise ConfigError("dataset.split list must have 3 entries")
        elif not isinstance(split, str):
            raise ConfigError(f"dataset.split must be a string or 3-list, got {split!r}")
        return cls(
            kind="path" if has_path else "synthetic",
            value=str(obj["path"] if has_path else obj["synthetic"]),
            name=obj.get("name"),
            split=split,
        )

    def label(self) -> str:
        """The dataset name recorded in results."""
        if self.name:
            return self.name
        return Path(self.value).stem if self.kind == "path" else self.value


@dataclass(frozen=True)
class ModelConfig:
    """Forecaster family and hyperparameters; ridge is the only family."""

    lam: float = 1e-3

    @classmethod
    def parse(cls, obj) -> "ModelConfig":
        _check_keys(obj, {"ridge"}, "model")
        if "ridge" not in obj:
            raise ConfigError("model must name the 'ridge' family")
        ridge = obj["ridge"]
        _check_keys(ridge, {"lam"}, "model.ridge")
        lam = ridge.get("lam", 1e-3)
        if isinstance(lam, bool) or not isinstance(lam, (int, float)) or lam < 0:
            raise ConfigError(f"model.ridge.lam must be a number >= 0, got {lam!r}")
        return cls(lam=float(lam))


@dataclass(frozen=True)
class OutputConfig:
    path: str
    format: str = "csv"

    @classmethod
    def parse(cls, obj) -> "OutputConfig":
        _check_keys(obj, {"path", "format"}, "output")
        if "path" not in obj:
            raise ConfigError("output needs a 'path'")
        fmt = obj.get("format", "csv")
        if fmt not in ("csv", "json"):
            raise ConfigError(f"output.format must be 'csv' or 'json', got {fmt!r}")
        return cls(path=str(obj["path"]), format=fmt)


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully validated experiment grid description."""

    dataset: DatasetSource
    lookback: int = 96
    horizons: tuple[int, ...] = _DEFAULT_HORIZONS
    methods: tuple[AugmentSpec, ...] = ()
    size_multipliers: tuple[int, ...] = (2,)
    seeds: tuple[int, ...] = _DEFAULT_SEEDS
    k_sweep: tuple[int, ...] | None = None
    auto_k: bool = False
    model: ModelConfig = ModelConfig()
    output: OutputConfig | None = None


_TOP_KEYS = {
    "dataset",
    "lookback",
    "horizons",
    "methods",
    "size_multipliers",
    "seeds",
    "k_sweep",
    "auto_k",
    "model",
    "output",
}


def parse_config(obj: dict) -> ExperimentConfig:
    """Validate a parsed JSON object into an :class:`ExperimentConfig`."""
    _check_keys(obj, _TOP_KEYS, "config")
    if "dataset" not in obj:
        raise ConfigError("config needs a 'dataset'")
    dataset = DatasetSource.parse(obj["dataset"])
    methods_raw = obj.get("methods", [])
    if not isinstance(methods_raw, list):
        raise ConfigError("methods must be a list of parameter objects")
    methods = []
    for i, params in enumerate(methods_raw):
        if not isinstance(params, dict):
            raise ConfigError(f"methods[{i}] must be an object")
        try:
            methods.append(AugmentSpec.from_params(params))
        except ParameterError as exc:
            raise ConfigError(f"methods[{i}]: {exc}") from None
    auto_k = obj.get("auto_k", False)
    if not isinstance(auto_k, bool):
        raise ConfigError(f"auto_k must be true or false, got {auto_k!r}")
    k_sweep = obj.get("k_sweep")
    if k_sweep is not None:
        k_sweep = _int_list(k_sweep, "k_sweep")
    if auto_k and k_sweep is None:
        k_sweep = DEFAULT_K_SWEEP
    if not auto_k and k_sweep is not None:
        # plain sweep mode: k_sweep expands dominant-shuffle methods in place
        pass
    config = ExperimentConfig(
        dataset=dataset,
        lookback=_int(obj.get("lookback", 96), "lookback"),
        horizons=_int_list(obj.get("horizons", list(_DEFAULT_HORIZONS)), "horizons"),
        methods=tuple(methods),
        size_multipliers=_int_list(
            obj.get("size_multipliers", [2]), "size_multipliers"
        ),
        seeds=_int_list(obj.get("seeds", list(_DEFAULT_SEEDS)), "seeds", minimum=0),
        k_sweep=k_sweep,
        auto_k=auto_k,
        model=ModelConfig.parse(obj["model"]) if "model" in obj else ModelConfig(),
        output=OutputConfig.parse(obj["output"]) if "output" in obj else None,
    )
    for h in config.horizons:
        if h < 1:
            raise ConfigError(f"horizons must be >= 1, got {h}")
    return config


def load_config(path: str | Path) -> ExperimentConfig:
    """Read and validate a JSON config file."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: not valid JSON ({exc})") from None
    return parse_config(obj)
