"""Config-driven experiment grid execution.

The grid for one run is: a baseline cell for every (horizon, seed) — always
present, at multiplier 1, with no augmentation — followed by one cell per
(method, horizon, multiplier, seed).  Cells are enumerated in that fixed
order and results are assembled by cell index, so the output is identical
whether cells run inline or across a process pool.

Each cell derives its augmentation seed as ``derive_seed(method_seed,
cell_seed)``: cells never share or consume each other's random streams, so
adding or removing grid entries cannot change any other entry's numbers.
A failure inside a cell is caught, recorded with ``status="error"``, and
the grid continues.

With ``auto_k``, the k for each dominant-shuffle method is chosen per
horizon by validation MSE over the candidate list before the grid runs
(ties prefer the smaller k); the test split plays no part in tuning.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from ..augment import AugmentSpec, Method, augment_batch, derive_seed
from ..dataset import DatasetSplits, WindowSampler, load_csv, split, windows
from ..forecaster import Metrics, RidgeForecaster
from ..synthetic import make_ett_like
from .config import DatasetSource, ExperimentConfig
from .results import ExperimentResult, RunRecord

__all__ = ["run_experiment", "attach_rel_improvement", "summarize", "dataset_manifest"]

BASELINE = "baseline"


@dataclass(frozen=True)
class _Cell:
    index: int
    params: dict | None  # None marks the baseline cell
    horizon: int
    multiplier: int
    seed: int


def _params_json(spec: AugmentSpec) -> str:
    params = {k: v for k, v in spec.to_params().items() if k != "method"}
    return json.dumps(params, sort_keys=True)


class _Context:
    """Per-process dataset state: splits plus window/baseline caches."""

    def __init__(self, payload: dict):
        source = DatasetSource(**payload["dataset"])
        if source.kind == "path":
            dataset = load_csv(source.value, name=source.name)
        else:
            dataset = make_ett_like(source.value)
        policy = source.split
        self.label = source.label()
        self.lookback = payload["lookback"]
        self.lam = payload["lam"]
        self.splits: DatasetSplits = split(dataset, list(policy) if isinstance(policy, tuple) else policy)
        self._windows: dict[tuple[int, str], list] = {}
        self._baseline: dict[int, tuple[Metrics, float]] = {}

    def windows_for(self, horizon: int, part: str) -> list:
        key = (horizon, part)
        if key not in self._windows:
            sampler = WindowSampler(self.lookback, horizon)
            self._windows[key] = windows(self.splits, part, sampler)
        return self._windows[key]

    def baseline(self, horizon: int) -> tuple[Metrics, float]:
        """Fit/evaluate once per horizon; baseline cells share the result."""
        if horizon not in self._baseline:
            start = time.perf_counter()
            model = RidgeForecaster(lam=self.lam).fit(self.windows_for(horizon, "train"))
            metrics = model.evaluate(self.windows_for(horizon, "test"))
            self._baseline[horizon] = (metrics, time.perf_counter() - start)
        return self._baseline[horizon]

    def run_cell(self, cell: _Cell) -> RunRecord:
        start = time.perf_counter()
        method = BASELINE
        params_json = "{}"
        try:
            if cell.params is None:
                metrics, wall = self.baseline(cell.horizon)
                return RunRecord(
                    dataset=self.label,
                    method=BASELINE,
                    params="{}",
                    horizon=cell.horizon,
                    multiplier=1,
                    seed=cell.seed,
                    mse=metrics.mse,
                    mae=metrics.mae,
                    wall_time_s=wall,
                )
            spec = AugmentSpec.from_params(cell.params)
            method = spec.method.value
            params_json = _params_json(spec)
            effective = spec.with_seed(derive_seed(spec.seed, cell.seed))
            train = self.windows_for(cell.horizon, "train")
            augmented = augment_batch(train, effective, cell.multiplier)
            model = RidgeForecaster(lam=self.lam).fit(augmented)
            metrics = model.evaluate(self.windows_for(cell.horizon, "test"))
            return RunRecord(
                dataset=self.label,
                method=method,
                params=params_json,
                horizon=cell.horizon,
                multiplier=cell.multiplier,
                seed=cell.seed,
                mse=metrics.mse,
                mae=metrics.mae,
                wall_time_s=time.perf_counter() - start,
            )
        except Exception as exc:  # cell failures never abort the grid
            return RunRecord(
                dataset=self.label,
                method=method,
                params=params_json,
                horizon=cell.horizon,
                multiplier=cell.multiplier if cell.params is not None else 1,
                seed=cell.seed,
                mse=None,
                mae=None,
                wall_time_s=time.perf_counter() - start,
                status="error",
                error=f"{type(exc).__name__}: {exc}",
            )


def _payload(config: ExperimentConfig) -> dict:
    source = config.dataset
    return {
        "dataset": {
            "kind": source.kind,
            "value": source.value,
            "name": source.name,
            "split": source.split,
        },
        "lookback": config.lookback,
        "lam": config.model.lam,
    }


def _tune_k(context: _Context, spec: AugmentSpec, horizon: int, config: ExperimentConfig) -> int:
    """Pick k by validation MSE; candidates ascending, ties keep the smaller."""
    train = context.windows_for(horizon, "train")
    val = context.windows_for(horizon, "val")
    multiplier = config.size_multipliers[0]
    cell_seed = config.seeds[0]
    best_k, best_mse = None, None
    for k in sorted(set(config.k_sweep)):
        candidate = replace(spec, k=k)
        effective = candidate.with_seed(derive_seed(candidate.seed, cell_seed))
        augmented = augment_batch(train, effective, multiplier)
        model = RidgeForecaster(lam=config.model.lam).fit(augmented)
        mse = model.evaluate(val).mse
        if best_mse is None or mse < best_mse:
            best_k, best_mse = k, mse
    return best_k


def _resolve_methods(
    config: ExperimentConfig, context: _Context | None
) -> list[dict[int, dict]]:
    """Final per-horizon parameter dicts for every grid method entry."""
    resolved: list[dict[int, dict]] = []
    for spec in config.methods:
        sweepable = spec.method is Method.DOMINANT_SHUFFLE
        if config.auto_k and sweepable:
            per_horizon = {}
            for horizon in config.horizons:
                k = _tune_k(context, spec, horizon, config)
                per_horizon[horizon] = replace(spec, k=k).to_params()
            resolved.append(per_horizon)
        elif config.k_sweep is not None and not config.auto_k and sweepable:
            for k in config.k_sweep:
                swept = replace(spec, k=k)
                resolved.append({h: swept.to_params() for h in config.horizons})
        else:
            resolved.append({h: spec.to_params() for h in config.horizons})
    return resolved


def _enumerate_cells(
    config: ExperimentConfig, resolved: list[dict[int, dict]]
) -> list[_Cell]:
    cells: list[_Cell] = []
    for horizon in config.horizons:
        for seed in config.seeds:
            cells.append(_Cell(len(cells), None, horizon, 1, seed))
    for per_horizon in resolved:
        for horizon in config.horizons:
            for multiplier in config.size_multipliers:
                for seed in config.seeds:
                    cells.append(
                        _Cell(len(cells), per_horizon[horizon], horizon, multiplier, seed)
                    )
    return cells


def attach_rel_improvement(records: list[RunRecord]) -> list[RunRecord]:
    """Fill the relative-improvement column against the matching baseline.

    A method cell is compared with the baseline at the same (dataset,
    horizon, seed); baseline rows get 0.0.  Cells without a usable baseline
    (failed, or baseline MSE of zero) keep ``None``.
    """
    baselines: dict[tuple[str, int, int], float] = {}
    for record in records:
        if record.method == BASELINE and record.status == "ok":
            baselines[(record.dataset, record.horizon, record.seed)] = record.mse
    out = []
    for record in records:
        if record.status != "ok":
            out.append(record)
            continue
        if record.method == BASELINE:
            out.append(replace(record, rel_improvement=0.0))
            continue
        base = baselines.get((record.dataset, record.horizon, record.seed))
        if base is None or base == 0.0:
            out.append(record)
            continue
        out.append(replace(record, rel_improvement=(base - record.mse) / base))
    return out


def summarize(records: list[RunRecord]) -> tuple[dict, ...]:
    """Aggregate across seeds per (method, params, horizon, multiplier).

    Population standard deviation over the ok cells; failed cells are
    counted but excluded from the statistics.
    """
    order: list[tuple] = []
    groups: dict[tuple, list[RunRecord]] = {}
    for record in records:
        key = (record.dataset, record.method, record.params, record.horizon, record.multiplier)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(record)
    summary = []
    for key in order:
        dataset, method, params, horizon, multiplier = key
        ok = [r for r in groups[key] if r.status == "ok"]
        rels = [r.rel_improvement for r in ok if r.rel_improvement is not None]
        entry = {
            "dataset": dataset,
            "method": method,
            "params": params,
            "horizon": horizon,
            "multiplier": multiplier,
            "n_ok": len(ok),
            "n_error": len(groups[key]) - len(ok),
            "mse_mean": float(np.mean([r.mse for r in ok])) if ok else None,
            "mse_std": float(np.std([r.mse for r in ok])) if ok else None,
            "mae_mean": float(np.mean([r.mae for r in ok])) if ok else None,
            "mae_std": float(np.std([r.mae for r in ok])) if ok else None,
            "rel_improvement_mean": float(np.mean(rels)) if rels else None,
        }
        summary.append(entry)
    return tuple(summary)


_WORKER_CONTEXT: _Context | None = None


def _worker_init(payload: dict) -> None:
    global _WORKER_CONTEXT
    _WORKER_CONTEXT = _Context(payload)


def _worker_run(cell: _Cell) -> RunRecord:
    return _WORKER_CONTEXT.run_cell(cell)


def dataset_manifest(config: ExperimentConfig) -> dict:
    """The split/normalizer manifest for the config's dataset (audit trail)."""
    return _Context(_payload(config)).splits.manifest()


def run_experiment(config: ExperimentConfig, *, workers: int = 1) -> ExperimentResult:
    """Run the full grid; deterministic mse/mae for any worker count."""
    payload = _payload(config)
    context: _Context | None = None
    if config.auto_k or workers <= 1:
        context = _Context(payload)
    resolved = _resolve_methods(config, context)
    cells = _enumerate_cells(config, resolved)
    records: list[RunRecord | None] = [None] * len(cells)
    if workers <= 1:
        for cell in cells:
            records[cell.index] = context.run_cell(cell)
    else:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_worker_init, initargs=(payload,)
        ) as pool:
            futures = {pool.submit(_worker_run, cell): cell.index for cell in cells}
            for future, index in futures.items():
                records[index] = future.result()
    records = attach_rel_improvement(records)
    return ExperimentResult(records=tuple(records), summary=summarize(records))
