import type { Move } from "./api.js";

export type Phase = "Playing" | "Won" | "Stuck";

export interface SessionState {
  values: readonly number[];
  position: number;
  // every visited position, oldest first; history[0] is always 1
  history: readonly number[];
  phase: Phase;
}

export interface Hint {
  target: number;
  // false when the solver's path does not pass through the current position,
  // so the target is merely legal, not known to lead anywhere
  known: boolean;
}

function phaseFor(values: readonly number[], position: number, moves: readonly Move[]): Phase {
  if (position === values.length + 1) return "Won";
  return moves.length === 0 ? "Stuck" : "Playing";
}

export function startSession(values: readonly number[], movesAtStart: readonly Move[]): SessionState {
  return {
    values,
    position: 1,
    history: [1],
    phase: phaseFor(values, 1, movesAtStart),
  };
}

// Legality comes from the server's move list for the current position; a
// click on anything else leaves the state untouched.
export function jump(
  state: SessionState,
  target: number,
  currentMoves: readonly Move[],
  movesAtTarget: readonly Move[],
): SessionState {
  if (state.phase !== "Playing") return state;
  if (!currentMoves.some((m) => m.to === target)) return state;
  return {
    values: state.values,
    position: target,
    history: [...state.history, target],
    phase: phaseFor(state.values, target, movesAtTarget),
  };
}

export function undo(state: SessionState, movesAtPrevious: readonly Move[]): SessionState {
  if (state.history.length < 2) return state;
  const history = state.history.slice(0, -1);
  const position = history[history.length - 1];
  if (position === undefined) return state;
  return {
    values: state.values,
    position,
    history,
    phase: phaseFor(state.values, position, movesAtPrevious),
  };
}

// The solver only answers "is there a path from position 1", so the hint
// follows its path when the player stands on it and otherwise falls back to
// some legal move without pretending it leads anywhere.
export function hintFor(
  state: SessionState,
  solvePath: readonly number[] | null,
  currentMoves: readonly Move[],
): Hint | null {
  if (state.phase !== "Playing") return null;
  if (solvePath !== null) {
    const at = solvePath.indexOf(state.position);
    if (at >= 0 && at + 1 < solvePath.length) {
      const target = solvePath[at + 1];
      if (target !== undefined && currentMoves.some((m) => m.to === target)) {
        return { target, known: true };
      }
    }
  }
  const first = currentMoves[0];
  return first === undefined ? null : { target: first.to, known: false };
}
