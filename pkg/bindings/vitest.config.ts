import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // the parity matrix shells out to the CLI hundreds of times
    testTimeout: 600_000,
    hookTimeout: 60_000,
  },
});
