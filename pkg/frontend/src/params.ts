// The classic nine-cell puzzle shown when no generator parameters arrive.
export const EXAMPLE_VALUES: readonly number[] = [3, 2, 2, 1, 4, 2, 1, 2, 3];

export interface GeneratorRequest {
  n: number;
  seed: number;
  solvable: boolean;
}

// ?n=12&seed=5&solvable=false selects a generated puzzle; n alone works too
// (seed defaults to 0, solvable to true). Without n the example loads.
export function parseParams(search: string): GeneratorRequest | null {
  const query = new URLSearchParams(search);
  const rawN = query.get("n");
  if (rawN === null) return null;
  const n = Number.parseInt(rawN, 10);
  if (Number.isNaN(n) || n < 1) return null;
  const seed = Number.parseInt(query.get("seed") ?? "0", 10);
  const solvableRaw = (query.get("solvable") ?? "true").toLowerCase();
  return {
    n,
    seed: Number.isNaN(seed) ? 0 : seed,
    solvable: !["false", "0", "no"].includes(solvableRaw),
  };
}
