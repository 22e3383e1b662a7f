"""Command line front end.

Exit codes follow decision-problem semantics so shell scripts can use the
tool as an oracle: 0 = solvable/valid/equivalent, 1 = the negative answer,
2 = malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import PuzzleError, certificate_from_text, certificate_to_text
from .formats import ParseError, format_graph, format_puzzle, parse_graph, parse_puzzle
from .gen import GenerationFailedError, gen_puzzle, spiral_layout
from .graph import GraphError, PathInstance, random_graph
from .harness import exhaustive_equiv, random_equiv
from .reduction import ReductionError, degree_reduce, reduce
from .solver import solve, verify_certificate, verify_path


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purgatory",
        description="Solve, verify, generate, and reduce purgatory jump puzzles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a puzzle file (exit 0 solvable, 1 not)")
    p_solve.add_argument("puzzle_file")
    p_solve.add_argument("--certificate", action="store_true",
                         help="also print the F/B certificate")
    p_solve.add_argument("--json", action="store_true", dest="as_json",
                         help="emit the same JSON object as POST /api/solve")

    p_verify = sub.add_parser("verify", help="check a path or certificate against a puzzle")
    p_verify.add_argument("puzzle_file")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--path", help="comma-separated positions, e.g. '1,4,5,9,6,8,10'")
    group.add_argument("--cert", help="direction letters, e.g. 'FFFBFF'")

    p_reduce = sub.add_parser("reduce", help="compile a PATH instance into a puzzle")
    p_reduce.add_argument("graph_file")
    p_reduce.add_argument("--trace", action="store_true",
                          help="emit JSON with the decoding trace instead of plain values")
    p_reduce.add_argument("--paper-constants", action="store_true",
                          help="use the historical off-by-one sublist constants")

    p_dr = sub.add_parser("degree-reduce", help="rewrite a graph to outdegree <= 2")
    p_dr.add_argument("graph_file")

    p_gen = sub.add_parser("gen", help="generate instances")
    gen_sub = p_gen.add_subparsers(dest="what", required=True)
    g_puzzle = gen_sub.add_parser("puzzle")
    g_puzzle.add_argument("--n", type=int, required=True)
    mode = g_puzzle.add_mutually_exclusive_group()
    mode.add_argument("--solvable", action="store_true", default=True)
    mode.add_argument("--unsolvable", dest="solvable", action="store_false")
    g_puzzle.add_argument("--seed", type=int, default=0)
    g_graph = gen_sub.add_parser("graph")
    g_graph.add_argument("--n", type=int, required=True)
    g_graph.add_argument("--m", type=int, required=True)
    g_graph.add_argument("--seed", type=int, default=0)
    g_graph.add_argument("--s", type=int, default=None, help="source vertex (default 1)")
    g_graph.add_argument("--t", type=int, default=None, help="target vertex (default n)")

    p_equiv = sub.add_parser(
        "equiv", help="round-trip oracle harness: reachability vs reduced-puzzle solvability"
    )
    p_equiv.add_argument("--max-vertices", type=int, required=True,
                         help="exhaustively sweep all digraphs on this many vertices")
    p_equiv.add_argument("--random", type=int, default=0, metavar="R",
                         help="additionally audit R random larger instances")
    p_equiv.add_argument("--seed", type=int, default=0)
    p_equiv.add_argument("--paper-constants", action="store_true")

    p_spiral = sub.add_parser("spiral", help="render a puzzle as an ASCII spiral")
    p_spiral.add_argument("puzzle_file")

    p_serve = sub.add_parser("serve", help="start the HTTP JSON service and web player")
    p_serve.add_argument("--port", type=int, default=None,
                         help="default: $PURGATORY_PORT or 8000")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static-dir", default=None,
                         help="player assets to serve at / (default: ./frontend/dist if present)")
    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _cmd_solve(args) -> int:
    puzzle = parse_puzzle(_read(args.puzzle_file))
    result = solve(puzzle)
    if args.as_json:
        cert = certificate_to_text(result.certificate) if result.certificate else None
        print(json.dumps({
            "solvable": result.solvable,
            "path": list(result.path) if result.path else None,
            "certificate": cert,
        }))
        return 0 if result.solvable else 1
    if not result.solvable:
        print("unsolvable")
        return 1
    print(" ".join(str(pos) for pos in result.path))
    if args.certificate:
        print(certificate_to_text(result.certificate))
    return 0


def _cmd_verify(args) -> int:
    puzzle = parse_puzzle(_read(args.puzzle_file))
    if args.path is not None:
        try:
            path = [int(tok) for tok in args.path.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"--path expects integers, got {args.path!r}") from None
        verdict = verify_path(puzzle, path)
        if verdict:
            print("valid")
            return 0
        print(f"invalid: {verdict.message}")
        return 1
    cert = certificate_from_text(args.cert)
    if verify_certificate(puzzle.value_at, puzzle.n, cert):
        print("valid")
        return 0
    print("invalid")
    return 1


def _cmd_reduce(args) -> int:
    inst = parse_graph(_read(args.graph_file))
    red = reduce(inst, paper_constants=args.paper_constants)
    if args.trace:
        print(json.dumps({"values": list(red.puzzle.values), "trace": red.trace.to_json()}))
    else:
        sys.stdout.write(format_puzzle(red.puzzle))
    return 0


def _cmd_degree_reduce(args) -> int:
    inst = parse_graph(_read(args.graph_file))
    sys.stdout.write(format_graph(degree_reduce(inst)))
    return 0


def _cmd_gen(args) -> int:
    if args.what == "puzzle":
        sys.stdout.write(format_puzzle(gen_puzzle(args.n, args.solvable, args.seed)))
        return 0
    g = random_graph(args.n, args.m, args.seed)
    s = args.s if args.s is not None else 1
    t = args.t if args.t is not None else args.n
    sys.stdout.write(format_graph(PathInstance(g, s, t)))
    return 0


def _cmd_equiv(args) -> int:
    report = exhaustive_equiv(args.max_vertices, paper_constants=args.paper_constants)
    if args.random:
        extra = random_equiv(args.random, args.seed, paper_constants=args.paper_constants)
        report.instances += extra.instances
        report.mismatches.extend(extra.mismatches)
        report.violations.extend(extra.violations)
    for line in report.mismatches:
        print(f"MISMATCH {line}")
    for line in report.violations:
        print(f"VIOLATION {line}")
    print(report.summary())
    return 0 if report.ok else 1


def _cmd_spiral(args) -> int:
    puzzle = parse_puzzle(_read(args.puzzle_file))
    coords = spiral_layout(puzzle.n)
    width = max(len(str(v)) for v in puzzle.values)
    xs = [x for x, _ in coords]
    ys = [y for _, y in coords]
    cell = {xy: str(v) for xy, v in zip(coords, puzzle.values)}
    for y in range(max(ys), min(ys) - 1, -1):
        row = " ".join(cell.get((x, y), "").rjust(width) for x in range(min(xs), max(xs) + 1))
        print(row.rstrip())
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    port = args.port
    if port is None:
        port = int(os.environ.get("PURGATORY_PORT", "8000"))
    static_dir = args.static_dir
    if static_dir is None and Path("frontend/dist").is_dir():
        static_dir = "frontend/dist"
    app = create_app(static_dir=static_dir)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


_HANDLERS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "reduce": _cmd_reduce,
    "degree-reduce": _cmd_degree_reduce,
    "gen": _cmd_gen,
    "equiv": _cmd_equiv,
    "spiral": _cmd_spiral,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (PuzzleError, GraphError, ReductionError, ParseError,
            GenerationFailedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
