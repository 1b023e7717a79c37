"""Result records and their CSV/JSON serializations.

The CSV header is fixed and documented; JSON output carries the records
plus a per-cell summary (mean/std across seeds).  Floats are written with
``repr``/``json`` shortest round-trip formatting, so parsing a results file
reproduces every number bit for bit.
"""
from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from ..errors import ParameterError

__all__ = ["CSV_HEADER", "RunRecord", "ExperimentResult", "emit_results"]

#: Fixed column order of the CSV output.
CSV_HEADER = (
    "dataset",
    "method",
    "params",
    "horizon",
    "multiplier",
    "seed",
    "mse",
    "mae",
    "wall_time_s",
    "rel_improvement",
    "status",
    "error",
)


@dataclass(frozen=True)
class RunRecord:
    """One grid cell: a (method, horizon, multiplier, seed) evaluation."""

    dataset: str
    method: str  # operator name, or "baseline"
    params: str  # canonical JSON of the method parameters ("{}" for baseline)
    horizon: int
    multiplier: int
    seed: int
    mse: float | None
    mae: float | None
    wall_time_s: float
    rel_improvement: float | None = None
    status: str = "ok"  # "ok" | "error"
    error: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ExperimentResult:
    """All grid records in enumeration order, plus per-cell seed aggregates."""

    records: tuple[RunRecord, ...]
    summary: tuple[dict, ...] = ()

    def to_dict(self) -> dict:
        return {
            "records": [r.to_dict() for r in self.records],
            "summary": [dict(s) for s in self.summary],
        }


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_csv(result: ExperimentResult, path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for record in result.records:
            row = record.to_dict()
            writer.writerow([_cell(row[column]) for column in CSV_HEADER])


def _emit_json(result: ExperimentResult, path: Path) -> None:
    path.write_text(json.dumps(result.to_dict(), indent=2) + "\n")


def emit_results(result: ExperimentResult, path: str | Path, format: str) -> Path:
    """Write the result table; ``format`` is ``"csv"`` or ``"json"``."""
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    if format == "csv":
        _emit_csv(result, path)
    elif format == "json":
        _emit_json(result, path)
    else:
        raise ParameterError(f"format must be 'csv' or 'json', got {format!r}")
    return path
