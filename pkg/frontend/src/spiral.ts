export type Coord = [number, number];

// Same walking rule as the generator on the server side: start at (0,0)
// facing -y, turn left whenever the left-hand cell is free, step. That makes
// the first step +x and the spiral counterclockwise.
export function spiralLayout(n: number): Coord[] {
  if (n < 1) throw new RangeError(`n must be >= 1, got ${n}`);
  let x = 0;
  let y = 0;
  let dx = 0;
  let dy = -1;
  const taken = new Set<string>(["0,0"]);
  const coords: Coord[] = [[0, 0]];
  for (let i = 1; i < n; i++) {
    const lx = -dy;
    const ly = dx;
    if (!taken.has(`${x + lx},${y + ly}`)) {
      dx = lx;
      dy = ly;
    }
    x += dx;
    y += dy;
    taken.add(`${x},${y}`);
    coords.push([x, y]);
  }
  return coords;
}

export interface GridPlacement {
  columns: number;
  rows: number;
  // 1-based CSS grid coordinates per puzzle position, y growing downward
  cells: { column: number; row: number }[];
}

// Layout for positions 1..n plus the goal cell n+1 one step past the end.
export function placeOnGrid(n: number): GridPlacement {
  const coords = spiralLayout(n + 1);
  const xs = coords.map((c) => c[0]);
  const ys = coords.map((c) => c[1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  return {
    columns: maxX - minX + 1,
    rows: maxY - minY + 1,
    cells: coords.map(([cx, cy]) => ({
      column: cx - minX + 1,
      row: maxY - cy + 1,
    })),
  };
}
