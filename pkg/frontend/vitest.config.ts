import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    testTimeout: 120_000,
    hookTimeout: 30_000,
    // the live-service suites each spawn their own python process
    fileParallelism: true,
  },
});
