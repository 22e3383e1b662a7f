"""Deciding solvability and producing/checking solution witnesses.

``solve`` runs a breadth-first search over the at most n+1 reachable
positions, so a returned solution always has the fewest possible jumps.
``verify_certificate`` is the streaming counterpart: it keeps one position
counter and one fetched value at a time, never the whole puzzle, which is
why it takes an accessor instead of a :class:`~purgatory.core.Puzzle`.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Callable

from .core import Certificate, Direction, Puzzle, PuzzleError

# brute_force_solvable is a test oracle, not a production path; keep it small.
ORACLE_MAX_N = 10**4


class OracleScaleExceededError(PuzzleError):
    """The brute-force oracle refuses puzzles beyond its size bound."""


@dataclass(frozen=True)
class SolveResult:
    """Outcome of ``solve``: a witness pair when solvable, plus diagnostics."""

    solvable: bool
    path: tuple[int, ...] | None
    certificate: Certificate | None
    explored: int


@dataclass(frozen=True)
class PathVerdict:
    """Truthy verdict of ``verify_path`` with a reason code when invalid."""

    valid: bool
    reason: str | None = None  # "BadStart" | "IllegalStep" | "NotAtGoal"
    step: int | None = None  # 1-indexed jump at fault for IllegalStep

    def __bool__(self) -> bool:
        return self.valid

    @property
    def message(self) -> str:
        if self.valid:
            return "valid"
        if self.reason == "IllegalStep":
            return f"IllegalStep({self.step})"
        return self.reason or "invalid"


def solve(p: Puzzle) -> SolveResult:
    """BFS from position 1; returns a shortest solution when one exists.

    Tie-break: from each dequeued position the backward target is enqueued
    before the forward one, so the returned path is reproducible.
    """
    values = p.values
    n = len(values)
    goal = n + 1
    # parent[pos] = 0 while undiscovered; parent[1] = -1 sentinel.
    parent = [0] * (n + 2)
    came_forward = bytearray(n + 2)
    parent[1] = -1
    queue = deque((1,))
    pop = queue.popleft
    push = queue.append
    explored = 1
    while queue:
        j = pop()
        v = values[j - 1]
        b = j - v
        if b >= 1 and parent[b] == 0:
            parent[b] = j
            explored += 1
            push(b)
        f = j + v
        if f <= goal and parent[f] == 0:
            parent[f] = j
            came_forward[f] = 1
            explored += 1
            if f == goal:
                return SolveResult(True, *_walk_back(parent, came_forward, goal), explored)
            push(f)
    return SolveResult(False, None, None, explored)


def _walk_back(parent, came_forward, goal):
    path = [goal]
    steps = []
    cur = goal
    while cur != 1:
        steps.append(Direction.FORWARD if came_forward[cur] else Direction.BACKWARD)
        cur = parent[cur]
        path.append(cur)
    path.reverse()
    steps.reverse()
    return tuple(path), tuple(steps)


def verify_path(p: Puzzle, path) -> PathVerdict:
    """Check that ``path`` starts at 1, makes only legal jumps, and ends at n+1."""
    n = p.n
    goal = n + 1
    if len(path) == 0 or path[0] != 1:
        return PathVerdict(False, "BadStart")
    values = p.values
    cur = 1
    for k in range(1, len(path)):
        nxt = path[k]
        if cur == goal:  # no moves exist from the goal
            return PathVerdict(False, "IllegalStep", k)
        v = values[cur - 1]
        if nxt != cur - v and nxt != cur + v:
            return PathVerdict(False, "IllegalStep", k)
        if not 1 <= nxt <= goal:
            return PathVerdict(False, "IllegalStep", k)
        cur = nxt
    if cur != goal:
        return PathVerdict(False, "NotAtGoal")
    return PathVerdict(True)


def verify_certificate(value_at: Callable[[int], int], n: int, cert: Certificate) -> bool:
    """Replay direction choices from position 1 through an accessor.

    Live state is exactly one position counter plus the value fetched for the
    current cell; values above n are rejected outright (both jumps would leave
    the range), without being kept.  True iff the walk consumes the whole
    certificate and ends exactly on n+1.
    """
    pos = 1
    goal = n + 1
    for d in cert:
        if pos == goal:
            return False
        v = value_at(pos)
        if v > n:
            return False
        pos = pos - v if d is Direction.BACKWARD else pos + v
        if not 1 <= pos <= goal:
            return False
    return pos == goal


def replay_certificate(p: Puzzle, cert: Certificate) -> tuple[int, ...] | None:
    """Positions visited while consuming ``cert`` from position 1.

    Returns None as soon as any step is illegal (including a step taken from
    the goal); otherwise the full path of len(cert)+1 positions, which may or
    may not end at the goal.
    """
    n = p.n
    goal = n + 1
    pos = 1
    path = [1]
    for d in cert:
        if pos == goal:
            return None
        v = p.values[pos - 1]
        pos = pos - v if d is Direction.BACKWARD else pos + v
        if not 1 <= pos <= goal:
            return None
        path.append(pos)
    return tuple(path)


def brute_force_solvable(p: Puzzle) -> bool:
    """Independent oracle: exhaustive depth-first search with a visited set."""
    n = p.n
    if n > ORACLE_MAX_N:
        raise OracleScaleExceededError(f"oracle handles n <= {ORACLE_MAX_N}, got {n}")
    goal = n + 1
    values = p.values
    seen = {1}
    stack = [1]
    while stack:
        j = stack.pop()
        if j == goal:
            return True
        v = values[j - 1]
        for target in (j + v, j - v):
            if 1 <= target <= goal and target not in seen:
                seen.add(target)
                stack.append(target)
    return False


def simulate_nondeterministic(p: Puzzle, seed: int, max_steps: int) -> Certificate | None:
    """Monte-Carlo run of the nondeterministic forward/backward chooser.

    Walks from position 1, picking uniformly among the legal moves of each
    cell, for at most ``max_steps`` jumps.  Returns the certificate if the
    walk reaches the goal, else None (including when it strands on a dead
    cell).  Every returned certificate passes ``verify_certificate``.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    rng = random.Random(seed)
    n = p.n
    goal = n + 1
    values = p.values
    pos = 1
    steps: list[Direction] = []
    for _ in range(max_steps):
        v = values[pos - 1]
        choices = []
        if pos - v >= 1:
            choices.append(Direction.BACKWARD)
        if pos + v <= goal:
            choices.append(Direction.FORWARD)
        if not choices:
            return None
        d = rng.choice(choices)
        steps.append(d)
        pos = pos - v if d is Direction.BACKWARD else pos + v
        if pos == goal:
            return tuple(steps)
    return None
