export type { AugmentedBatch, WindowBatch } from "./csv.js";
export {
  CsvFormatError,
  formatFloat,
  formatWindowsCsv,
  makeBatch,
  parseAugmentedCsv,
  parseFloatStrict,
  toNested,
} from "./csv.js";
export type { AugmentOptions, BandName, MethodName } from "./cli.js";
export { FreqaugCliError, augmentBatch, resolvePython } from "./cli.js";
