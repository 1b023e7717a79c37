"""Command-line interface: ``augment``, ``bench``, and ``inspect`` verbs.

augment
    Read a series CSV (loader format: timestamp column plus variates) or a
    pre-windowed CSV (``--windows``), apply one augmentation, and write every
    resulting window.  Values pass through untouched apart from augmentation —
    no normalization.  Output schema: ``window,copy,step,<variate names>``,
    window-major within each copy block, copy 0 being the originals.  The
    pre-windowed input schema is ``window,step,<variate names>`` with window
    ids 0..B-1 and steps 0..N-1, both dense and in order.  All floats are
    written with ``repr`` so parsing them back is exact.

bench
    Run an experiment config (see :mod:`freqaug.bench.config`) and emit
    results plus the dataset split manifest.

inspect
    Print one window's magnitude spectrum per variate as CSV
    (``variate,bin,magnitude,dominant_rank``) for plotting; rank is filled
    for the top-k dominant bins, blank elsewhere.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from .augment import AugmentSpec, Band, Method, augment_batch
from .bench import emit_results, load_config, run_experiment
from .bench.runner import dataset_manifest
from .dataset import load_csv
from .errors import FreqaugError, ParameterError, ParseError, SizeError
from .spectral import rfft, top_k_bins
from .windows import SeriesWindow

__all__ = ["main", "read_windows_csv"]


# ------------------------------------------------------------- window CSV IO

def read_windows_csv(path: str | Path) -> tuple[list[SeriesWindow], tuple[str, ...]]:
    """Parse the pre-windowed interchange format into equal-length blocks.

    Returns windows with an empty future (all rows in ``history``); the
    caller re-splits at its lookback.  Strict: violations raise
    :class:`ParseError` with the offending line number.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SizeError(f"{path}: file is empty") from None
        if len(header) < 3 or header[0] != "window" or header[1] != "step":
            raise ParseError(
                f"{path}: expected header 'window,step,<variates>', got {header!r}"
            )
        names = tuple(header[2:])
        blocks: list[list[list[float]]] = []
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"{path}: line {line_no} has {len(row)} fields, expected {len(header)}"
                )
            try:
                window = int(row[0])
                step = int(row[1])
                values = [float(cell) for cell in row[2:]]
            except ValueError:
                raise ParseError(f"{path}: cannot parse line {line_no}") from None
            if window == len(blocks):
                blocks.append([])
            elif window != len(blocks) - 1:
                raise ParseError(
                    f"{path}: line {line_no}: window ids must be dense and ordered; "
                    f"got {window} after {len(blocks) - 1}"
                )
            if step != len(blocks[-1]):
                raise ParseError(
                    f"{path}: line {line_no}: expected step {len(blocks[-1])}, got {step}"
                )
            blocks[-1].append(values)
    if not blocks:
        raise SizeError(f"{path}: no windows")
    length = len(blocks[0])
    for i, block in enumerate(blocks):
        if len(block) != length:
            raise ParseError(
                f"{path}: window {i} has {len(block)} steps, expected {length}"
            )
    arrays = [np.asarray(block, dtype=np.float64) for block in blocks]
    return arrays, names


def _split_blocks(blocks, lookback: int, horizon: int | None) -> list[SeriesWindow]:
    length = blocks[0].shape[0]
    if horizon is not None and lookback + horizon != length:
        raise SizeError(
            f"windows have {length} steps but lookback {lookback} + horizon "
            f"{horizon} = {lookback + horizon}"
        )
    if length <= lookback:
        raise SizeError(
            f"windows have {length} steps; need more than lookback {lookback}"
        )
    return [SeriesWindow(history=b[:lookback], future=b[lookback:]) for b in blocks]


def _sliding_windows(values, lookback: int, horizon: int, stride: int) -> list[SeriesWindow]:
    length = lookback + horizon
    usable = values.shape[0] - length
    if usable < 0:
        raise SizeError(
            f"series has {values.shape[0]} rows; too few for lookback {lookback} "
            f"+ horizon {horizon}"
        )
    out = []
    for i in range(usable // stride + 1):
        s = i * stride
        out.append(
            SeriesWindow(history=values[s : s + lookback], future=values[s + lookback : s + length])
        )
    return out


def _write_augmented_csv(path, augmented, n_sources: int, names) -> None:
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["window", "copy", "step", *names])
        for index, item in enumerate(augmented):
            copy, window = divmod(index, n_sources)
            block = np.concatenate([item.history, item.future])
            for step in range(block.shape[0]):
                writer.writerow(
                    [window, copy, step, *(repr(float(v)) for v in block[step])]
                )


# ------------------------------------------------------------------ augment

def _spec_from_args(args) -> AugmentSpec:
    kwargs = {}
    for flag, field in (
        ("k", "k"),
        ("mask_rate", "mask_rate"),
        ("sigma", "sigma"),
        ("pool_size", "pool_size"),
        ("upsample_factor", "upsample_factor"),
    ):
        value = getattr(args, flag)
        if value is not None:
            kwargs[field] = value
    if args.band is not None:
        kwargs["band"] = Band.coerce(args.band)
    return AugmentSpec(
        method=Method.coerce(args.method),
        per_variate_independent=not args.shared_permutation,
        include_dc=args.include_dc,
        include_nyquist=args.include_nyquist,
        sigma_is_absolute=args.sigma_absolute,
        seed=args.seed,
        **kwargs,
    )


def _load_input_windows(args) -> tuple[list[SeriesWindow], tuple[str, ...]]:
    if args.windows:
        blocks, names = read_windows_csv(args.input)
        return _split_blocks(blocks, args.lookback, args.horizon), names
    if args.horizon is None:
        raise ParameterError("--horizon is required for series input")
    dataset = load_csv(args.input)
    return (
        _sliding_windows(dataset.values, args.lookback, args.horizon, args.stride),
        dataset.variate_names,
    )


def _cmd_augment(args) -> int:
    spec = _spec_from_args(args)
    windows, names = _load_input_windows(args)
    augmented = augment_batch(windows, spec, args.multiplier)
    _write_augmented_csv(args.output, augmented, len(windows), names)
    print(f"wrote {len(augmented)} windows ({len(windows)} sources x {args.multiplier}) to {args.output}")
    return 0


# -------------------------------------------------------------------- bench

def _cmd_bench(args) -> int:
    config = load_config(args.config)
    result = run_experiment(config, workers=args.workers)
    written = []
    if args.out is not None:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        if args.format in ("csv", "both"):
            written.append(emit_results(result, out / "results.csv", "csv"))
        if args.format in ("json", "both"):
            written.append(emit_results(result, out / "results.json", "json"))
        manifest = out / "manifest.json"
        import json as _json

        manifest.write_text(_json.dumps(dataset_manifest(config), indent=2) + "\n")
        written.append(manifest)
    elif config.output is not None:
        written.append(emit_results(result, config.output.path, config.output.format))
    else:
        raise ParameterError("no output destination: pass --out or set output in the config")
    ok = sum(1 for r in result.records if r.status == "ok")
    print(f"{len(result.records)} records ({ok} ok) -> {', '.join(str(p) for p in written)}")
    return 0


# ------------------------------------------------------------------ inspect

def _cmd_inspect(args) -> int:
    if args.windows:
        blocks, names = read_windows_csv(args.input)
        windows = _split_blocks(blocks, args.lookback, args.horizon)
    else:
        if args.horizon is None:
            raise ParameterError("--horizon is required for series input")
        dataset = load_csv(args.input)
        windows = _sliding_windows(dataset.values, args.lookback, args.horizon, 1)
        names = dataset.variate_names
    if not 0 <= args.window < len(windows):
        raise SizeError(f"window index {args.window} out of range [0, {len(windows)})")
    block = windows[args.window].concat()
    rows = []
    for d, name in enumerate(names):
        spectrum = rfft(block[:, d])
        mags = np.abs(spectrum.coefficients)
        dominant = top_k_bins(spectrum, args.k)
        rank = {bin_index: r + 1 for r, bin_index in enumerate(dominant.indices)}
        for b in range(mags.shape[0]):
            rows.append([name, b, repr(float(mags[b])), rank.get(b, "")])
    if args.output is not None:
        fh = open(args.output, "w", newline="")
    else:
        fh = sys.stdout
    try:
        writer = csv.writer(fh)
        writer.writerow(["variate", "bin", "magnitude", "dominant_rank"])
        writer.writerows(rows)
    finally:
        if args.output is not None:
            fh.close()
    return 0


# --------------------------------------------------------------------- main

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freqaug",
        description="Frequency-domain augmentation for forecasting windows.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    aug = sub.add_parser("augment", help="augment windows from a CSV")
    aug.add_argument("--input", required=True, help="input CSV path")
    aug.add_argument("--output", required=True, help="output CSV path")
    aug.add_argument("--method", required=True, help="augmentation method name")
    aug.add_argument("--lookback", type=int, required=True)
    aug.add_argument("--horizon", type=int, default=None,
                     help="required for series input; optional cross-check for --windows")
    aug.add_argument("--stride", type=int, default=1, help="series-windowing stride")
    aug.add_argument("--windows", action="store_true",
                     help="input is pre-windowed (window,step,<variates>)")
    aug.add_argument("--seed", type=int, default=0)
    aug.add_argument("--multiplier", type=int, default=2)
    aug.add_argument("--k", type=int, default=None)
    aug.add_argument("--band", default=None, help="full | dominant | minor")
    aug.add_argument("--mask-rate", dest="mask_rate", type=float, default=None)
    aug.add_argument("--sigma", type=float, default=None)
    aug.add_argument("--sigma-absolute", dest="sigma_absolute", action="store_true")
    aug.add_argument("--pool-size", dest="pool_size", type=int, default=None)
    aug.add_argument("--upsample-factor", dest="upsample_factor", type=int, default=None)
    aug.add_argument("--shared-permutation", dest="shared_permutation",
                     action="store_true",
                     help="one permutation shared by all variates")
    aug.add_argument("--include-dc", dest="include_dc", action="store_true")
    aug.add_argument("--include-nyquist", dest="include_nyquist", action="store_true")
    aug.set_defaults(func=_cmd_augment)

    bench = sub.add_parser("bench", help="run an experiment config")
    bench.add_argument("--config", required=True, help="JSON config path")
    bench.add_argument("--out", default=None, help="output directory")
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--format", choices=("csv", "json", "both"), default="both")
    bench.set_defaults(func=_cmd_bench)

    inspect = sub.add_parser("inspect", help="dump one window's spectrum as CSV")
    inspect.add_argument("--input", required=True)
    inspect.add_argument("--lookback", type=int, required=True)
    inspect.add_argument("--horizon", type=int, default=None)
    inspect.add_argument("--windows", action="store_true")
    inspect.add_argument("--window", type=int, default=0, help="window index")
    inspect.add_argument("--k", type=int, default=10, help="dominant bins to rank")
    inspect.add_argument("--output", default=None, help="default: stdout")
    inspect.set_defaults(func=_cmd_inspect)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FreqaugError as exc:
        print(f"freqaug: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
