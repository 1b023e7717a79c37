/**
 * Subprocess driver: runs `python -m freqaug augment --windows ...` and
 * round-trips batches through the CSV interchange.  The interpreter is
 * `$FREQAUG_PYTHON` when set, else `python3`.
 */
import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import {
  AugmentedBatch,
  WindowBatch,
  formatWindowsCsv,
  parseAugmentedCsv,
} from "./csv.js";

export type MethodName =
  | "dominant_shuffle"
  | "freq_mask"
  | "freq_mix"
  | "freq_add"
  | "freq_pool"
  | "freq_noise"
  | "freq_random"
  | "upsample";

export type BandName = "full" | "dominant" | "minor";

export interface AugmentOptions {
  method: MethodName;
  seed?: number;
  /** Output size as a multiple of the input batch (1 = originals only). */
  multiplier?: number;
  k?: number;
  band?: BandName;
  maskRate?: number;
  sigma?: number;
  /** Interpret sigma as an absolute noise scale instead of relative. */
  sigmaAbsolute?: boolean;
  poolSize?: number;
  upsampleFactor?: number;
  /** One permutation shared by all variates of a window. */
  sharedPermutation?: boolean;
  includeDc?: boolean;
  includeNyquist?: boolean;
  /** Interpreter override; defaults to $FREQAUG_PYTHON, then python3. */
  python?: string;
}

/** The CLI exited non-zero; `message` carries its stderr diagnostic. */
export class FreqaugCliError extends Error {
  constructor(
    message: string,
    readonly exitCode: number | null,
    readonly stderr: string,
  ) {
    super(message);
    this.name = "FreqaugCliError";
  }
}

export function resolvePython(override?: string): string {
  return override ?? process.env.FREQAUG_PYTHON ?? "python3";
}

function cliArgs(
  batch: WindowBatch,
  input: string,
  output: string,
  options: AugmentOptions,
): string[] {
  const args = [
    "-m", "freqaug", "augment",
    "--input", input,
    "--output", output,
    "--windows",
    "--lookback", String(batch.lookback),
    "--horizon", String(batch.steps - batch.lookback),
    "--method", options.method,
    "--seed", String(options.seed ?? 0),
    "--multiplier", String(options.multiplier ?? 2),
  ];
  if (options.k !== undefined) args.push("--k", String(options.k));
  if (options.band !== undefined) args.push("--band", options.band);
  if (options.maskRate !== undefined) args.push("--mask-rate", String(options.maskRate));
  if (options.sigma !== undefined) args.push("--sigma", String(options.sigma));
  if (options.sigmaAbsolute) args.push("--sigma-absolute");
  if (options.poolSize !== undefined) args.push("--pool-size", String(options.poolSize));
  if (options.upsampleFactor !== undefined) {
    args.push("--upsample-factor", String(options.upsampleFactor));
  }
  if (options.sharedPermutation) args.push("--shared-permutation");
  if (options.includeDc) args.push("--include-dc");
  if (options.includeNyquist) args.push("--include-nyquist");
  return args;
}

/**
 * Augment a batch through the CLI.
 *
 * Returns all `multiplier * batch.windows` windows; the copy-0 block is
 * the untouched originals.  The input batch is never modified.
 */
export function augmentBatch(
  batch: WindowBatch,
  options: AugmentOptions,
): AugmentedBatch {
  const python = resolvePython(options.python);
  const dir = mkdtempSync(join(tmpdir(), "freqaug-"));
  try {
    const input = join(dir, "in.csv");
    const output = join(dir, "out.csv");
    writeFileSync(input, formatWindowsCsv(batch), "utf8");
    const proc = spawnSync(python, cliArgs(batch, input, output, options), {
      encoding: "utf8",
      maxBuffer: 256 * 1024 * 1024,
    });
    if (proc.error) {
      throw new FreqaugCliError(
        `failed to launch ${python}: ${proc.error.message}`, null, "",
      );
    }
    if (proc.status !== 0) {
      const match = proc.stderr.match(/freqaug: error: (.*)/);
      throw new FreqaugCliError(
        match ? match[1] : `exit ${proc.status}: ${proc.stderr.trim()}`,
        proc.status,
        proc.stderr,
      );
    }
    return parseAugmentedCsv(
      readFileSync(output, "utf8"), batch.windows, batch.lookback,
    );
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}
