import { defineConfig } from "vitest/config";

// Tests run in plain node; the ones that need a DOM build a happy-dom Window
// themselves, which keeps node's fetch available for talking to the real
// service in the integration suite.
export default defineConfig({
  test: {
    environment: "node",
    testTimeout: 30_000,
    hookTimeout: 60_000,
  },
});
