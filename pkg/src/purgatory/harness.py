"""Round-trip validation of the reduction against the reachability oracle.

The equivalence the reduction must deliver: for every PATH instance,
``reachable(inst)`` must equal ``solve(reduce(inst).puzzle).solvable``.  The
harness sweeps instance families (exhaustive small graphs, random larger
ones), checks that equivalence, and audits every encoded puzzle against the
structural invariants of the construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import legal_moves
from .graph import DirectedGraph, PathInstance, random_graph, reachable
from .reduction import ReducedInstance, _degree_reduce, _reduce_with_normal, decode_solution
from .solver import solve


@dataclass
class EquivReport:
    """Tally of one harness sweep."""

    instances: int = 0
    mismatches: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.violations

    def summary(self) -> str:
        return f"{self.instances} instances checked, {len(self.mismatches)} mismatches"


def structural_violations(red: ReducedInstance, source: PathInstance) -> list[str]:
    """Scan an encoded puzzle against every layout invariant.

    ``source`` is the normal-form instance the encoder consumed (s=1, t=n,
    outdegree <= 2); its edges pin down which sublist form each vertex must
    have and where the side cells must land.
    """
    n = red.trace.n
    values = red.puzzle.values
    seven_n = 7 * n
    bad: list[str] = []
    if len(values) != seven_n - 2:
        bad.append(f"length {len(values)} != 7n-2 = {seven_n - 2}")
        return bad
    for i in range(1, n + 1):
        want = 4 * n + 2 * i - 1
        if values[i - 1] != want:
            bad.append(f"vertex cell {i} holds {values[i - 1]}, want {want}")
    for pos in range(n + 1, 4 * n + 1):
        if values[pos - 1] != seven_n:
            bad.append(f"moat cell {pos} holds {values[pos - 1]}, want {seven_n}")
    if values[seven_n - 3] != seven_n:
        bad.append(f"final cell holds {values[seven_n - 3]}, want {seven_n}")
    out = source.graph.out
    for i in range(1, n):
        base = 4 * n + 3 * i - 2
        triple = values[base - 1 : base + 2]
        nbrs = out[i - 1]
        if len(nbrs) == 0:
            want_triple = (seven_n, seven_n, seven_n)
        elif len(nbrs) == 1:
            want_triple = (4 * n + 3 * i - nbrs[0] - 2, 1, seven_n)
        else:
            want_triple = (4 * n + 3 * i - nbrs[0] - 2, 1, 4 * n + 3 * i - nbrs[1])
        if tuple(triple) != want_triple:
            bad.append(f"sublist {i} is {tuple(triple)}, want {want_triple}")
            continue
        # side-cell values must clear the 3n traversal floor so no short hop
        # can land inside another sublist
        for off, cell in ((0, triple[0]), (2, triple[2])):
            if cell != seven_n and cell < 3 * n + 1:
                bad.append(f"sublist {i} cell {base + off} holds {cell} < 3n+1")
        # landing check: the only legal move off each live side cell is the
        # backward jump onto its edge's vertex cell
        for off, target in ((0, nbrs[0] if nbrs else None),
                            (2, nbrs[1] if len(nbrs) == 2 else None)):
            pos = base + off
            moves = legal_moves(red.puzzle, pos)
            if target is None:
                if moves:
                    bad.append(f"dead sublist cell {pos} has moves {moves}")
            elif [(d.letter, q) for d, q in moves] != [("B", target)]:
                bad.append(f"sublist cell {pos} moves to {moves}, want only B->{target}")
    # every 7n cell is dead, and vertex cell n is the goal's only predecessor
    goal = seven_n - 1
    winners = []
    for pos in range(1, seven_n - 1):
        v = values[pos - 1]
        if v == seven_n and legal_moves(red.puzzle, pos):
            bad.append(f"moat-valued cell {pos} is not dead")
        if pos + v == goal or pos - v == goal:
            winners.append(pos)
    if winners != [n]:
        bad.append(f"goal predecessors {winners}, want [{n}]")
    return bad


def gadget_violations(inst: PathInstance) -> list[str]:
    """Check the outdegree rewrite alone: degrees, size bound, reachability."""
    g1, _ = _degree_reduce(inst.graph)
    reduced = PathInstance(g1, inst.s, inst.t)
    bad = []
    if g1.max_outdegree() > 2:
        bad.append(f"outdegree {g1.max_outdegree()} survives degree reduction")
    bound = inst.graph.n + inst.graph.edge_count
    if g1.n > bound:
        bad.append(f"vertex count {g1.n} exceeds |V|+|E| = {bound}")
    if reachable(reduced) != reachable(inst):
        bad.append("degree reduction changed reachability")
    return bad


def audit_instance(
    inst: PathInstance,
    report: EquivReport,
    paper_constants: bool = False,
    check_structure: bool = True,
    check_decode: bool = True,
    check_gadget: bool = False,
    expected: bool | None = None,
) -> None:
    """Run one instance through the pipeline and record problems in ``report``.

    ``expected`` short-circuits the reachability oracle when the caller has
    already computed it.  Structure/decode checks only make sense for the
    corrected constants, so they are skipped in paper-constants mode.
    """
    red, normal_form = _reduce_with_normal(inst, paper_constants=paper_constants)
    result = solve(red.puzzle)
    want = reachable(inst) if expected is None else expected
    report.instances += 1
    if result.solvable != want:
        report.mismatches.append(
            f"{_describe(inst)}: reachable={want} but puzzle solvable={result.solvable}"
        )
    if paper_constants:
        return
    if check_structure:
        for problem in structural_violations(red, normal_form):
            report.violations.append(f"{_describe(inst)}: {problem}")
    if check_decode and result.solvable:
        walk = decode_solution(red, result.path)
        for problem in _walk_violations(inst, walk):
            report.violations.append(f"{_describe(inst)}: {problem}")
    if check_gadget:
        for problem in gadget_violations(inst):
            report.violations.append(f"{_describe(inst)}: {problem}")


def _describe(inst: PathInstance) -> str:
    edges = inst.graph.edges()
    shown = ",".join(f"{u}->{v}" for u, v in edges[:12])
    if len(edges) > 12:
        shown += ",..."
    return f"n={inst.graph.n} s={inst.s} t={inst.t} edges[{shown}]"


def _walk_violations(inst: PathInstance, walk: list[int]) -> list[str]:
    bad = []
    if not walk or walk[0] != inst.s:
        bad.append(f"decoded walk {walk} does not start at s={inst.s}")
        return bad
    if walk[-1] != inst.t:
        bad.append(f"decoded walk {walk} does not end at t={inst.t}")
    out = inst.graph.out
    for a, b in zip(walk, walk[1:]):
        if b not in out[a - 1]:
            bad.append(f"decoded walk uses missing edge {a}->{b}")
    return bad


def exhaustive_equiv(
    num_vertices: int,
    paper_constants: bool = False,
    max_mismatches: int | None = None,
    check_decode: bool = False,
) -> EquivReport:
    """Sweep every self-loop-free digraph on ``num_vertices`` labeled vertices
    and every (s, t) pair.

    For k vertices that is 2^(k(k-1)) * k^2 instances; k=4 gives 65536.
    ``max_mismatches`` stops the sweep early once that many mismatches are on
    record (used to demonstrate that the historical constants fail without
    paying for the full sweep).
    """
    k = num_vertices
    pairs = [(u, v) for u in range(1, k + 1) for v in range(1, k + 1) if u != v]
    report = EquivReport()
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        g = DirectedGraph.from_edges(k, edges)
        # one BFS per source serves all k targets
        reach = {s: _reach_set(g, s) for s in range(1, k + 1)}
        for s in range(1, k + 1):
            for t in range(1, k + 1):
                audit_instance(
                    PathInstance(g, s, t),
                    report,
                    paper_constants=paper_constants,
                    check_decode=check_decode,
                    expected=t in reach[s],
                )
                if max_mismatches is not None and len(report.mismatches) >= max_mismatches:
                    return report
    return report


def _reach_set(g: DirectedGraph, s: int) -> set[int]:
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for u in g.out[v - 1]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def random_equiv(
    count: int,
    seed: int,
    max_n: int = 50,
    max_m: int = 200,
    paper_constants: bool = False,
) -> EquivReport:
    """Audit ``count`` random instances (self-loops included, outdegrees mixed
    so the chain gadget fires), with full structure/decode/gadget checks."""
    rng = random.Random(seed)
    report = EquivReport()
    for _ in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(0, min(max_m, n * n))
        g = random_graph(n, m, seed=rng.randrange(2**62))
        inst = PathInstance(g, rng.randint(1, n), rng.randint(1, n))
        audit_instance(
            inst,
            report,
            paper_constants=paper_constants,
            check_gadget=True,
        )
    return report


def selfloop_variants_equiv(
    num_vertices: int,
    samples: int,
    seed: int,
    paper_constants: bool = False,
) -> EquivReport:
    """Audit random self-loop-augmented digraphs on ``num_vertices`` vertices,
    all (s, t) pairs each (the exhaustive sweep above excludes self-loops)."""
    k = num_vertices
    pairs = [(u, v) for u in range(1, k + 1) for v in range(1, k + 1) if u != v]
    rng = random.Random(seed)
    report = EquivReport()
    for _ in range(samples):
        edges = [e for e in pairs if rng.random() < 0.5]
        edges.extend((v, v) for v in range(1, k + 1) if rng.random() < 0.5)
        rng.shuffle(edges)
        g = DirectedGraph.from_edges(k, edges)
        for s in range(1, k + 1):
            for t in range(1, k + 1):
                audit_instance(
                    PathInstance(g, s, t),
                    report,
                    paper_constants=paper_constants,
                )
    return report
