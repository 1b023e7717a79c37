/**
 * Windowed-CSV interchange.
 *
 * Input format (what the CLI's `--windows` mode reads):
 *     window,step,<variate names...>
 * with dense, ordered window ids and, inside each window, dense ordered
 * steps.  Augmented output adds a copy column:
 *     window,copy,step,<variate names...>
 * rows ordered by flat index `copy * nWindows + window` (copy-0 block
 * first, originals untouched).
 *
 * Floats are written as the shortest string that parses back to the same
 * IEEE-754 double on both sides, so a round trip is bit-exact.
 */

/** A batch of equally-shaped forecasting windows, row-major (window, step, variate). */
export interface WindowBatch {
  /** Flat values, length windows * steps * variates. */
  readonly data: Float64Array;
  readonly windows: number;
  /** Time steps per window (lookback + horizon). */
  readonly steps: number;
  readonly variates: number;
  /** History length; the remaining steps are the forecast horizon. */
  readonly lookback: number;
  readonly names: readonly string[];
}

export class CsvFormatError extends Error {}

function defaultNames(variates: number): string[] {
  return Array.from({ length: variates }, (_, d) => `v${d}`);
}

/** Build a batch from nested arrays shaped [window][step][variate]. */
export function makeBatch(
  values: readonly (readonly (readonly number[])[])[],
  lookback: number,
  names?: readonly string[],
): WindowBatch {
  if (values.length === 0) {
    throw new CsvFormatError("batch needs at least one window");
  }
  const steps = values[0].length;
  const variates = values[0][0]?.length ?? 0;
  if (steps < 2 || variates < 1) {
    throw new CsvFormatError(`window shape ${steps}x${variates} too small`);
  }
  if (!Number.isInteger(lookback) || lookback < 1 || lookback >= steps) {
    throw new CsvFormatError(`lookback ${lookback} outside [1, ${steps - 1}]`);
  }
  const columnNames = names ? [...names] : defaultNames(variates);
  if (columnNames.length !== variates) {
    throw new CsvFormatError(
      `${columnNames.length} names for ${variates} variates`,
    );
  }
  const data = new Float64Array(values.length * steps * variates);
  let at = 0;
  for (const window of values) {
    if (window.length !== steps) {
      throw new CsvFormatError("all windows must share one shape");
    }
    for (const row of window) {
      if (row.length !== variates) {
        throw new CsvFormatError("all windows must share one shape");
      }
      for (const v of row) data[at++] = v;
    }
  }
  return { data, windows: values.length, steps, variates, lookback, names: columnNames };
}

/** Unpack a batch back into nested [window][step][variate] arrays. */
export function toNested(batch: WindowBatch): number[][][] {
  const out: number[][][] = [];
  let at = 0;
  for (let w = 0; w < batch.windows; w++) {
    const win: number[][] = [];
    for (let t = 0; t < batch.steps; t++) {
      win.push(Array.from(batch.data.subarray(at, at + batch.variates)));
      at += batch.variates;
    }
    out.push(win);
  }
  return out;
}

/** Exact decimal form: JS `String(number)` is shortest-round-trip, but
 *  spells negative zero as "0"; keep the sign so the peer reproduces the
 *  identical double. */
export function formatFloat(v: number): string {
  if (!Number.isFinite(v)) {
    throw new CsvFormatError(`non-finite value ${v} cannot be serialized`);
  }
  return Object.is(v, -0) ? "-0.0" : String(v);
}

export function parseFloatStrict(field: string, line: number): number {
  const trimmed = field.trim();
  if (trimmed === "") {
    throw new CsvFormatError(`line ${line}: empty numeric field`);
  }
  const v = Number(trimmed);
  if (Number.isNaN(v) && trimmed.toLowerCase() !== "nan") {
    throw new CsvFormatError(`line ${line}: cannot parse '${field}' as a number`);
  }
  if (!Number.isFinite(v)) {
    throw new CsvFormatError(`line ${line}: non-finite value '${field}'`);
  }
  return v;
}

/** Serialize a batch in the CLI's `--windows` input format. */
export function formatWindowsCsv(batch: WindowBatch): string {
  const lines: string[] = [`window,step,${batch.names.join(",")}`];
  let at = 0;
  for (let w = 0; w < batch.windows; w++) {
    for (let t = 0; t < batch.steps; t++) {
      const fields = new Array<string>(batch.variates);
      for (let d = 0; d < batch.variates; d++) {
        fields[d] = formatFloat(batch.data[at++]);
      }
      lines.push(`${w},${t},${fields.join(",")}`);
    }
  }
  return lines.join("\n") + "\n";
}

export interface AugmentedBatch {
  /** All copies stacked: flat index is `copy * sources + window`. */
  readonly batch: WindowBatch;
  readonly sources: number;
  readonly copies: number;
}

function parseIndex(field: string, line: number, what: string): number {
  const v = Number(field);
  if (!Number.isInteger(v) || v < 0) {
    throw new CsvFormatError(`line ${line}: bad ${what} '${field}'`);
  }
  return v;
}

/** Parse the CLI's augmented output (`window,copy,step,...`). */
export function parseAugmentedCsv(
  text: string,
  sources: number,
  lookback: number,
): AugmentedBatch {
  const rows = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (rows.length < 2) {
    throw new CsvFormatError("augmented CSV has no data rows");
  }
  const header = rows[0].split(",");
  if (header[0] !== "window" || header[1] !== "copy" || header[2] !== "step") {
    throw new CsvFormatError(
      `unexpected header '${rows[0]}': want window,copy,step,<names>`,
    );
  }
  const names = header.slice(3);
  const variates = names.length;
  if (variates < 1) {
    throw new CsvFormatError("augmented CSV has no variate columns");
  }
  const dataRows = rows.length - 1;
  const stepsTotal = dataRows / sources;
  if (!Number.isInteger(stepsTotal)) {
    throw new CsvFormatError(
      `${dataRows} rows not divisible by ${sources} source windows`,
    );
  }
  // steps per window comes from the first window/copy block
  let steps = 0;
  while (
    steps + 1 < rows.length &&
    rows[steps + 1].startsWith("0,0,")
  ) {
    steps += 1;
  }
  if (steps === 0 || !Number.isInteger(dataRows / (sources * steps))) {
    throw new CsvFormatError("cannot infer a rectangular window shape");
  }
  const copies = dataRows / (sources * steps);
  const total = sources * copies;
  const data = new Float64Array(total * steps * variates);
  for (let r = 0; r < dataRows; r++) {
    const line = r + 2; // 1-based, after the header
    const fields = rows[r + 1].split(",");
    if (fields.length !== 3 + variates) {
      throw new CsvFormatError(
        `line ${line}: ${fields.length} fields, want ${3 + variates}`,
      );
    }
    const window = parseIndex(fields[0], line, "window id");
    const copy = parseIndex(fields[1], line, "copy id");
    const step = parseIndex(fields[2], line, "step");
    const flat = copy * sources + window;
    const expected = Math.floor(r / steps);
    if (flat !== expected || step !== r % steps) {
      throw new CsvFormatError(
        `line ${line}: rows out of order (window ${window}, copy ${copy}, step ${step})`,
      );
    }
    const base = (flat * steps + step) * variates;
    for (let d = 0; d < variates; d++) {
      data[base + d] = parseFloatStrict(fields[3 + d], line);
    }
  }
  return {
    batch: { data, windows: total, steps, variates, lookback, names },
    sources,
    copies,
  };
}
