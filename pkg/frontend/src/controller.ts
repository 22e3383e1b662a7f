import type { Api, Move } from "./api.js";
import type { Hint, SessionState } from "./state.js";
import * as session from "./state.js";

export interface Snapshot {
  state: SessionState;
  // legal moves at the current position; empty at the goal and when stuck
  targets: readonly Move[];
  hint: Hint | null;
}

export type Listener = (snap: Snapshot) => void;

// Owns the session plus everything fetched for it: a per-position move
// cache (moves never change for a fixed puzzle, which also makes undo
// synchronous) and the one solver answer a hint needs.  Every user action
// takes a sequence token; a response that comes back after a newer action
// is dropped instead of clobbering the state.
export class Controller {
  private readonly api: Api;
  private state: SessionState | null = null;
  private movesCache = new Map<number, Move[]>();
  // undefined = not asked yet, null = asked and unsolvable
  private solvePath: number[] | null | undefined;
  private hint: Hint | null = null;
  private seq = 0;
  private listeners: Listener[] = [];

  constructor(api: Api) {
    this.api = api;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  snapshot(): Snapshot {
    const state = this.state;
    if (state === null) throw new Error("no puzzle loaded");
    return {
      state,
      targets: this.movesCache.get(state.position) ?? [],
      hint: this.hint,
    };
  }

  private emit(): void {
    const snap = this.snapshot();
    for (const listener of this.listeners) listener(snap);
  }

  private async fetchMoves(values: readonly number[], position: number): Promise<Move[]> {
    // the goal is outside the list, so the moves endpoint rejects it
    if (position === values.length + 1) return [];
    const cache = this.movesCache;
    const cached = cache.get(position);
    if (cached !== undefined) return cached;
    const res = await this.api.moves([...values], position);
    // write into the map captured before the await: if a reload swapped the
    // cache meanwhile, this response belongs to the retired puzzle
    cache.set(position, res.moves);
    return res.moves;
  }

  async load(values: readonly number[]): Promise<void> {
    const token = ++this.seq;
    this.movesCache = new Map();
    this.solvePath = undefined;
    this.hint = null;
    this.state = null;
    const moves = await this.fetchMoves(values, 1);
    if (token !== this.seq) return;
    this.state = session.startSession(values, moves);
    this.emit();
  }

  async click(target: number): Promise<void> {
    const state = this.state;
    if (state === null || state.phase !== "Playing") return;
    const current = this.movesCache.get(state.position) ?? [];
    if (!current.some((m) => m.to === target)) return;
    const token = ++this.seq;
    const movesAtTarget = await this.fetchMoves(state.values, target);
    if (token !== this.seq) return;
    this.state = session.jump(state, target, current, movesAtTarget);
    this.hint = null;
    this.emit();
  }

  undo(): void {
    const state = this.state;
    if (state === null || state.history.length < 2) return;
    this.seq++;
    const previous = state.history[state.history.length - 2];
    const movesAtPrevious =
      previous === undefined ? [] : this.movesCache.get(previous) ?? [];
    this.state = session.undo(state, movesAtPrevious);
    this.hint = null;
    this.emit();
  }

  async requestHint(): Promise<void> {
    const state = this.state;
    if (state === null || state.phase !== "Playing") return;
    const token = ++this.seq;
    if (this.solvePath === undefined) {
      const res = await this.api.solve([...state.values]);
      if (token !== this.seq) return;
      this.solvePath = res.solvable && res.path !== null ? res.path : null;
    }
    const current = this.movesCache.get(state.position) ?? [];
    this.hint = session.hintFor(state, this.solvePath, current);
    this.emit();
  }
}
