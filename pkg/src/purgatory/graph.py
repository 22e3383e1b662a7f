"""Directed graphs and the PATH (st-connectivity) problem.

These are the source instances of the hardness reduction; ``reachable`` is
also the independent oracle the round-trip harness checks the reduction
against.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable


class GraphError(Exception):
    """Malformed graph or PATH instance."""


class TooManyEdgesError(GraphError):
    """More edges requested than the n*n distinct ordered pairs."""


@dataclass(frozen=True)
class DirectedGraph:
    """Vertices labeled 1..n with ordered, duplicate-free out-neighbor lists."""

    n: int
    out: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        if len(self.out) != self.n:
            raise GraphError(f"expected {self.n} out-neighbor lists, got {len(self.out)}")
        norm = []
        for v, nbrs in enumerate(self.out, start=1):
            seen: set[int] = set()
            kept = []
            for u in nbrs:
                if not 1 <= u <= self.n:
                    raise GraphError(f"edge ({v}, {u}) leaves the vertex range 1..{self.n}")
                if u not in seen:  # duplicates merged, first occurrence wins
                    seen.add(u)
                    kept.append(u)
            norm.append(tuple(kept))
        object.__setattr__(self, "out", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> DirectedGraph:
        out: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not 1 <= u <= n:
                raise GraphError(f"edge ({u}, {v}) leaves the vertex range 1..{n}")
            out[u - 1].append(v)
        return cls(n, tuple(tuple(nbrs) for nbrs in out))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in self.out[u - 1]]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.out)

    def outdegree(self, v: int) -> int:
        return len(self.out[v - 1])

    def max_outdegree(self) -> int:
        return max(len(nbrs) for nbrs in self.out)


@dataclass(frozen=True)
class PathInstance:
    """A PATH problem input: directed graph plus source s and target t."""

    graph: DirectedGraph
    s: int
    t: int

    def __post_init__(self):
        n = self.graph.n
        if not 1 <= self.s <= n:
            raise GraphError(f"source {self.s} outside 1..{n}")
        if not 1 <= self.t <= n:
            raise GraphError(f"target {self.t} outside 1..{n}")


def reachable(inst: PathInstance) -> bool:
    """True iff t can be reached from s; s = t counts via the empty path."""
    if inst.s == inst.t:
        return True
    out = inst.graph.out
    seen = {inst.s}
    queue = deque((inst.s,))
    while queue:
        v = queue.popleft()
        for u in out[v - 1]:
            if u == inst.t:
                return True
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return False


def witness_path(inst: PathInstance) -> list[int] | None:
    """A concrete s-to-t path (BFS parents), or None when unreachable."""
    if inst.s == inst.t:
        return [inst.s]
    out = inst.graph.out
    parent = {inst.s: 0}
    queue = deque((inst.s,))
    while queue:
        v = queue.popleft()
        for u in out[v - 1]:
            if u not in parent:
                parent[u] = v
                if u == inst.t:
                    path = [u]
                    while path[-1] != inst.s:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(u)
    return None


def random_graph(n: int, m: int, seed: int) -> DirectedGraph:
    """Exactly m distinct directed edges drawn uniformly without replacement.

    Self-loops are part of the pool, so there are n*n possible edges.
    Deterministic per (n, m, seed).
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    if m > n * n:
        raise TooManyEdgesError(f"asked for {m} edges, only {n * n} exist")
    rng = random.Random(seed)
    ids = rng.sample(range(n * n), m)
    return DirectedGraph.from_edges(n, [(i // n + 1, i % n + 1) for i in ids])
