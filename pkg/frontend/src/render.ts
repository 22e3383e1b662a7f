import type { Snapshot } from "./controller.js";
import { placeOnGrid } from "./spiral.js";

const BANNERS = {
  Playing: "",
  Won: "You escaped the list.",
  Stuck: "Stuck: no legal moves from here. Undo to back out.",
} as const;

// Rebuilds the whole view from the snapshot on every change.  Uses
// root.ownerDocument throughout so tests can render into any DOM
// implementation without globals.
export function render(
  root: HTMLElement,
  snap: Snapshot,
  onCell: (position: number) => void,
): void {
  const doc = root.ownerDocument;
  const { state, targets, hint } = snap;
  const n = state.values.length;
  const placement = placeOnGrid(n);
  const visited = new Set(state.history);
  const targetSet = new Set(targets.map((m) => m.to));

  root.textContent = "";

  const banner = doc.createElement("div");
  banner.className = `banner ${state.phase.toLowerCase()}`;
  banner.textContent =
    state.phase === "Playing"
      ? `Position ${state.position}, ${state.history.length - 1} jumps so far`
      : BANNERS[state.phase];
  root.appendChild(banner);

  const board = doc.createElement("div");
  board.className = "board";
  board.style.setProperty(
    "grid-template-columns",
    `repeat(${placement.columns}, var(--cell-size))`,
  );
  for (let pos = 1; pos <= n + 1; pos++) {
    const spot = placement.cells[pos - 1];
    if (spot === undefined) continue;
    const cell = doc.createElement("div");
    const classes = ["cell"];
    if (pos === n + 1) classes.push("goal");
    else if ((state.values[pos - 1] ?? 0) > n) classes.push("dead");
    if (pos === state.position) classes.push("current");
    else if (visited.has(pos)) classes.push("visited");
    if (targetSet.has(pos)) classes.push("target");
    if (hint !== null && hint.target === pos) classes.push("hint");
    cell.className = classes.join(" ");
    cell.dataset.pos = String(pos);
    cell.style.setProperty("grid-column", String(spot.column));
    cell.style.setProperty("grid-row", String(spot.row));
    cell.textContent = pos === n + 1 ? "EXIT" : String(state.values[pos - 1]);
    cell.addEventListener("click", () => onCell(pos));
    board.appendChild(cell);
  }
  root.appendChild(board);

  const note = doc.createElement("div");
  note.className = "note";
  if (hint !== null) {
    note.textContent = hint.known
      ? `Hint: jump to position ${hint.target}.`
      : `No known continuation from here; position ${hint.target} is at least legal.`;
  }
  root.appendChild(note);
}
