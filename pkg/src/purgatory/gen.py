"""Reproducible puzzle generators and the newspaper-style spiral layout."""

from __future__ import annotations

import random

from .core import Puzzle
from .solver import solve

UNSOLVABLE_RETRIES = 1000


class GenerationFailedError(Exception):
    """Rejection sampling ran out of retries (tiny n is mostly solvable)."""


def gen_puzzle(n: int, solvable: bool, seed: int) -> Puzzle:
    """Deterministic random puzzle of size n.

    Solvable mode plants a strictly increasing forward jump chain from
    position 1 to the goal and fills every other cell uniformly in [1, n], so
    the result is solvable by construction.  Unsolvable mode rejection-samples
    uniform fills until the solver rejects one; for very small n nearly every
    fill is solvable and generation may fail.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    if solvable:
        hops = rng.randint(0, n - 1)
        chain = [1] + sorted(rng.sample(range(2, n + 1), hops))
        values = rng.choices(range(1, n + 1), k=n)
        for a, b in zip(chain, chain[1:]):
            values[a - 1] = b - a
        values[chain[-1] - 1] = n + 1 - chain[-1]
        return Puzzle(tuple(values))
    for _ in range(UNSOLVABLE_RETRIES):
        candidate = Puzzle(tuple(rng.choices(range(1, n + 1), k=n)))
        if not solve(candidate).solvable:
            return candidate
    raise GenerationFailedError(
        f"no unsolvable fill of size {n} found in {UNSOLVABLE_RETRIES} tries"
    )


def spiral_layout(n: int) -> list[tuple[int, int]]:
    """Grid coordinates of positions 1..n on a counterclockwise square spiral.

    Position 1 sits at (0, 0) and the first step goes +x; after that the walk
    turns left whenever the cell to its left is free, else continues straight.
    Consecutive positions are orthogonally adjacent and never collide.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    # Starting the walk facing -y makes the very first left turn produce the
    # +x step, so one rule covers every move.
    x, y = 0, 0
    dx, dy = 0, -1
    taken = {(0, 0)}
    coords = [(0, 0)]
    for _ in range(n - 1):
        left = (-dy, dx)
        if (x + left[0], y + left[1]) not in taken:
            dx, dy = left
        x, y = x + dx, y + dy
        taken.add((x, y))
        coords.append((x, y))
    return coords
