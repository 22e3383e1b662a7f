"""Text file formats: puzzles and PATH instances.

Both formats are '#'-comment friendly, whitespace-tolerant decimal text.

Puzzle file: the non-comment tokens are the cell values in position order.

Graph file: first non-comment line is ``n m s t``; then exactly m lines
``u v``, one directed edge each, all labels in 1..n.
"""

from __future__ import annotations

from .core import Puzzle
from .graph import DirectedGraph, GraphError, PathInstance


class ParseError(Exception):
    """Malformed input document."""


def _tokens(text: str) -> list[str]:
    toks = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        toks.extend(body.split())
    return toks


def _int(tok: str, what: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"bad {what}: {tok!r} is not a decimal integer") from None


def parse_puzzle(text: str) -> Puzzle:
    toks = _tokens(text)
    if not toks:
        raise ParseError("puzzle file holds no values")
    return Puzzle(tuple(_int(t, "cell value") for t in toks))


def format_puzzle(p: Puzzle) -> str:
    return " ".join(str(v) for v in p.values) + "\n"


def parse_graph(text: str) -> PathInstance:
    toks = _tokens(text)
    if len(toks) < 4:
        raise ParseError("graph file needs a header line 'n m s t'")
    n, m, s, t = (_int(tok, "header field") for tok in toks[:4])
    body = toks[4:]
    if len(body) != 2 * m:
        raise ParseError(f"header says {m} edges ({2 * m} tokens) but the body has {len(body)} tokens")
    edges = [(_int(body[2 * i], "edge endpoint"), _int(body[2 * i + 1], "edge endpoint"))
             for i in range(m)]
    try:
        return PathInstance(DirectedGraph.from_edges(n, edges), s, t)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(inst: PathInstance) -> str:
    g = inst.graph
    lines = [f"{g.n} {g.edge_count} {inst.s} {inst.t}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
