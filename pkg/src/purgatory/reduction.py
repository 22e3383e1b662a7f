"""The PATH-to-purgatory reduction pipeline and its solution decoder.

The pipeline has three stages, composed by :func:`reduce`:

1. ``degree_reduce``  — rewrite every vertex of outdegree d > 2 into a chain
   of d-1 vertices, each of outdegree <= 2, preserving reachability.
2. ``relabel``        — renumber so the source is vertex 1 and the target is
   vertex n (collapsing to a single vertex when s = t).
3. ``encode``         — emit the 7n-2 cell jump puzzle.

Encoded layout, 1-indexed, for a graph on n vertices with s=1, t=n:

    positions 1..n        vertex cells, cell i holds 4n+2i-1 (its only legal
                          jump is forward onto the center of sublist i; cell n
                          jumps straight to the goal 7n-1)
    positions n+1..4n     the moat: 3n cells of value 7n, all dead
    positions 4n+1..7n-3  n-1 three-cell sublists; sublist i encodes the
                          outgoing edges of vertex i (see below)
    position 7n-2         a final dead 7n cell

Sublist i sits at positions (4n+3i-2, 4n+3i-1, 4n+3i) and takes one of
three forms:

    outdegree 0:                   (7n, 7n, 7n)
    outdegree 1, edge (i, j):      (4n+3i-j-2, 1, 7n)
    outdegree 2, edges (i,j),(i,k): (4n+3i-j-2, 1, 4n+3i-k)

so a backward jump off the first cell lands exactly on vertex cell j and a
backward jump off the third cell lands exactly on vertex cell k; every other
jump off those cells leaves the range.  ``paper_constants=True`` emits the
historical variants 4n+3i-j-3 / 4n+3i-k-1 instead, whose landings are off by
one (they hit j+1 / k+1); the round-trip harness demonstrates that those
break the reachability equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Puzzle
from .graph import DirectedGraph, PathInstance
from .solver import verify_path


class ReductionError(Exception):
    """Reduction pipeline misuse."""


class PreconditionViolatedError(ReductionError):
    """Encoder input is not in (s=1, t=n, outdegree <= 2) normal form."""


class NotASolutionError(ReductionError):
    """decode_solution was handed a path the puzzle rejects."""


@dataclass(frozen=True)
class ReductionTrace:
    """Bookkeeping that maps puzzle structure back to original graph vertices.

    ``origin`` maps every final vertex label to the original vertex it came
    from (chain vertices introduced by degree reduction map to the vertex
    they split).  ``relabel`` is the opposite direction for original
    vertices; when s = t collapsed the instance, only s is mapped.
    """

    n: int
    origin: dict[int, int]
    relabel: dict[int, int]

    def vertex_cell(self, v: int) -> int:
        """Puzzle position of final vertex v's cell (the identity map)."""
        if not 1 <= v <= self.n:
            raise ReductionError(f"vertex {v} outside 1..{self.n}")
        return v

    def sublist_center(self, i: int) -> int:
        """Puzzle position of the center of sublist i (vertices 1..n-1 only)."""
        if not 1 <= i <= self.n - 1:
            raise ReductionError(f"vertex {i} has no sublist (range is 1..{self.n - 1})")
        return 4 * self.n + 3 * i - 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertex_cell": {i: i for i in range(1, self.n + 1)},
            "sublist_center": {i: self.sublist_center(i) for i in range(1, self.n)},
            "origin": dict(self.origin),
            "relabel": dict(self.relabel),
        }


@dataclass(frozen=True)
class ReducedInstance:
    """An encoded puzzle together with its decoding trace."""

    puzzle: Puzzle
    trace: ReductionTrace

    def __post_init__(self):
        if self.puzzle.n != 7 * self.trace.n - 2:
            raise ReductionError(
                f"puzzle length {self.puzzle.n} != 7*{self.trace.n}-2"
            )


def _degree_reduce(g: DirectedGraph) -> tuple[DirectedGraph, dict[int, int]]:
    """Outdegree <= 2 rewrite plus the new-vertex -> split-vertex map."""
    origin = {v: v for v in range(1, g.n + 1)}
    out: list[list[int]] = [list(nbrs) for nbrs in g.out]
    next_label = g.n
    for u in range(1, g.n + 1):
        nbrs = g.out[u - 1]
        d = len(nbrs)
        if d <= 2:
            continue
        # chain u -> w1 -> ... -> w_{d-2}; u keeps v1, w_t hands out v_{t+1},
        # and the last chain vertex takes the final two targets
        chain = []
        for _ in range(d - 2):
            next_label += 1
            chain.append(next_label)
            origin[next_label] = u
            out.append([])
        out[u - 1] = [nbrs[0], chain[0]]
        for t in range(d - 2):
            w = chain[t]
            if t < d - 3:
                out[w - 1] = [nbrs[t + 1], chain[t + 1]]
            else:
                out[w - 1] = [nbrs[d - 2], nbrs[d - 1]]
    reduced = DirectedGraph(next_label, tuple(tuple(nbrs) for nbrs in out))
    return reduced, origin


def degree_reduce(inst: PathInstance) -> PathInstance:
    """Rewrite so every outdegree is <= 2; s, t and reachability unchanged."""
    reduced, _ = _degree_reduce(inst.graph)
    return PathInstance(reduced, inst.s, inst.t)


def relabel(inst: PathInstance) -> tuple[PathInstance, dict[int, int]]:
    """Renumber so s becomes 1 and t becomes n, returning the label map.

    Requires all outdegrees <= 2.  Other vertices take labels 2..n-1 in
    ascending old-label order.  The degenerate s = t instance collapses to a
    single edgeless vertex (reachability there is trivially true either way).
    """
    g = inst.graph
    if g.max_outdegree() > 2:
        raise PreconditionViolatedError(
            f"relabel needs outdegree <= 2, found {g.max_outdegree()}"
        )
    if inst.s == inst.t:
        return PathInstance(DirectedGraph(1, ((),)), 1, 1), {inst.s: 1}
    mapping = {inst.s: 1, inst.t: g.n}
    label = 2
    for v in range(1, g.n + 1):
        if v != inst.s and v != inst.t:
            mapping[v] = label
            label += 1
    out: list[tuple[int, ...]] = [()] * g.n
    for v in range(1, g.n + 1):
        out[mapping[v] - 1] = tuple(mapping[u] for u in g.out[v - 1])
    return PathInstance(DirectedGraph(g.n, tuple(out)), 1, g.n), mapping


def encode(inst: PathInstance, paper_constants: bool = False) -> ReducedInstance:
    """Emit the 7n-2 cell puzzle for a normal-form instance (s=1, t=n, deg<=2)."""
    g = inst.graph
    n = g.n
    if inst.s != 1 or inst.t != n:
        raise PreconditionViolatedError(f"encoder needs s=1 and t=n, got s={inst.s}, t={inst.t}")
    if g.max_outdegree() > 2:
        raise PreconditionViolatedError(
            f"encoder needs outdegree <= 2, found {g.max_outdegree()}"
        )
    shift = 1 if paper_constants else 0
    seven_n = 7 * n
    values = [0] * (seven_n - 2)
    for i in range(1, n + 1):
        values[i - 1] = 4 * n + 2 * i - 1
    for pos in range(n + 1, 4 * n + 1):
        values[pos - 1] = seven_n
    for i in range(1, n):
        base = 4 * n + 3 * i - 2  # first cell of sublist i
        nbrs = g.out[i - 1]
        if len(nbrs) == 0:
            triple = (seven_n, seven_n, seven_n)
        elif len(nbrs) == 1:
            j = nbrs[0]
            triple = (4 * n + 3 * i - j - 2 - shift, 1, seven_n)
        else:
            j, k = nbrs
            triple = (4 * n + 3 * i - j - 2 - shift, 1, 4 * n + 3 * i - k - shift)
        values[base - 1 : base + 2] = triple
    values[seven_n - 3] = seven_n  # the single trailing 7n at position 7n-2
    trace = ReductionTrace(
        n=n,
        origin={v: v for v in range(1, n + 1)},
        relabel={v: v for v in range(1, n + 1)},
    )
    return ReducedInstance(Puzzle(tuple(values)), trace)


def _reduce_with_normal(
    inst: PathInstance, paper_constants: bool = False
) -> tuple[ReducedInstance, PathInstance]:
    """reduce() plus the normal-form instance the encoder consumed."""
    g1, origin1 = _degree_reduce(inst.graph)
    inst2, rmap = relabel(PathInstance(g1, inst.s, inst.t))
    red = encode(inst2, paper_constants=paper_constants)
    origin = {new: origin1[old] for old, new in rmap.items()}
    relabel_map = {v: rmap[v] for v in range(1, inst.graph.n + 1) if v in rmap}
    trace = ReductionTrace(n=inst2.graph.n, origin=origin, relabel=relabel_map)
    return ReducedInstance(red.puzzle, trace), inst2


def reduce(inst: PathInstance, paper_constants: bool = False) -> ReducedInstance:
    """Full pipeline: degree-reduce, relabel, encode, with a composed trace."""
    red, _ = _reduce_with_normal(inst, paper_constants=paper_constants)
    return red


def decode_solution(red: ReducedInstance, path) -> list[int]:
    """Map a winning puzzle path back to a vertex walk in the original graph.

    The positions <= n visited by the path are exactly the vertex cells, in
    traversal order; mapping them through ``trace.origin`` and collapsing
    consecutive duplicates (chain vertices share their origin) yields an
    s-to-t walk of the original graph.
    """
    verdict = verify_path(red.puzzle, path)
    if not verdict:
        raise NotASolutionError(f"path rejected: {verdict.message}")
    n = red.trace.n
    origin = red.trace.origin
    walk: list[int] = []
    for pos in path:
        if pos <= n:
            v = origin[pos]
            if not walk or walk[-1] != v:
                walk.append(v)
    return walk
