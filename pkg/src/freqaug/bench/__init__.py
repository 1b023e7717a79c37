"""Config-driven benchmark grids: parse, run, serialize."""
from .config import (
    DEFAULT_K_SWEEP,
    DatasetSource,
    ExperimentConfig,
    ModelConfig,
    OutputConfig,
    load_config,
    parse_config,
)
from .results import CSV_HEADER, ExperimentResult, RunRecord, emit_results
from .runner import attach_rel_improvement, dataset_manifest, run_experiment, summarize

__all__ = [
    "DEFAULT_K_SWEEP",
    "DatasetSource",
    "ExperimentConfig",
    "ModelConfig",
    "OutputConfig",
    "load_config",
    "parse_config",
    "CSV_HEADER",
    "ExperimentResult",
    "RunRecord",
    "emit_results",
    "attach_rel_improvement",
    "dataset_manifest",
    "run_experiment",
    "summarize",
]
