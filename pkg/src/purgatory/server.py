"""Stateless HTTP JSON API, also hosting the browser player's static files.

Every request carries its whole input (puzzle values, position, seed), so
handlers share no mutable state and are safe under concurrency.  Errors are
``{"error": "..."}`` bodies: 400 for malformed or rule-violating input, 413
when a requested size exceeds the configured cap.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .core import AtGoalError, Puzzle, PuzzleError, certificate_to_text, legal_moves
from .gen import GenerationFailedError, gen_puzzle
from .graph import DirectedGraph, GraphError, PathInstance
from .reduction import reduce
from .solver import solve, verify_path

DEFAULT_MAX_N = 10**6


class _ApiError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message
        super().__init__(message)


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _ApiError(400, f"{what} must be an integer, got {value!r}")
    return value


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text, 10)
    except (TypeError, ValueError):
        raise _ApiError(400, f"{what} must be an integer, got {text!r}") from None


def _parse_bool(text: str, what: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise _ApiError(400, f"{what} must be true or false, got {text!r}")


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise _ApiError(400, "request body is not valid JSON") from None
    if not isinstance(body, dict):
        raise _ApiError(400, "request body must be a JSON object")
    return body


def create_app(static_dir: str | None = None, max_n: int = DEFAULT_MAX_N) -> FastAPI:
    app = FastAPI(title="purgatory", docs_url=None, redoc_url=None)

    @app.exception_handler(_ApiError)
    async def _api_error(request: Request, exc: _ApiError):
        return JSONResponse({"error": exc.message}, status_code=exc.status)

    def _puzzle_from(body: dict) -> Puzzle:
        values = body.get("values")
        if not isinstance(values, list) or not values:
            raise _ApiError(400, "values must be a non-empty list of integers")
        if len(values) > max_n:
            raise _ApiError(413, f"puzzle size {len(values)} exceeds the cap {max_n}")
        for v in values:
            _require_int(v, "every cell value")
        try:
            return Puzzle(tuple(values))
        except PuzzleError as exc:
            raise _ApiError(400, str(exc)) from None

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/puzzle")
    def api_puzzle(n: str | None = None, solvable: str = "true", seed: str = "0"):
        if n is None:
            raise _ApiError(400, "missing query parameter n")
        size = _parse_int(n, "n")
        if size < 1:
            raise _ApiError(400, f"n must be >= 1, got {size}")
        if size > max_n:
            raise _ApiError(413, f"n={size} exceeds the cap {max_n}")
        want_solvable = _parse_bool(solvable, "solvable")
        seed_value = _parse_int(seed, "seed")
        try:
            p = gen_puzzle(size, want_solvable, seed_value)
        except GenerationFailedError as exc:
            raise _ApiError(400, str(exc)) from None
        return {"values": list(p.values), "n": size, "seed": seed_value}

    @app.post("/api/solve")
    async def api_solve(request: Request):
        p = _puzzle_from(await _json_body(request))
        result = solve(p)
        return {
            "solvable": result.solvable,
            "path": list(result.path) if result.path is not None else None,
            "certificate": (
                certificate_to_text(result.certificate)
                if result.certificate is not None
                else None
            ),
        }

    @app.post("/api/moves")
    async def api_moves(request: Request):
        body = await _json_body(request)
        p = _puzzle_from(body)
        pos = _require_int(body.get("position"), "position")
        try:
            moves = legal_moves(p, pos)
        except AtGoalError as exc:
            raise _ApiError(400, f"AtGoal: {exc}") from None
        except PuzzleError as exc:
            raise _ApiError(400, str(exc)) from None
        return {
            "moves": [{"dir": d.letter, "to": target} for d, target in moves],
            # true when one of the listed jumps escapes the list outright
            "win": any(target == p.goal for _, target in moves),
        }

    @app.post("/api/verify")
    async def api_verify(request: Request):
        body = await _json_body(request)
        p = _puzzle_from(body)
        path = body.get("path")
        if not isinstance(path, list):
            raise _ApiError(400, "path must be a list of positions")
        for item in path:
            _require_int(item, "every path position")
        verdict = verify_path(p, path)
        return {"valid": verdict.valid, "reason": None if verdict.valid else verdict.message}

    @app.post("/api/reduce")
    async def api_reduce(request: Request):
        body = await _json_body(request)
        n = _require_int(body.get("n"), "n")
        if n < 1:
            raise _ApiError(400, f"n must be >= 1, got {n}")
        if n > max_n:
            raise _ApiError(413, f"n={n} exceeds the cap {max_n}")
        raw_edges = body.get("edges", [])
        if not isinstance(raw_edges, list):
            raise _ApiError(400, "edges must be a list of [u, v] pairs")
        edges = []
        for item in raw_edges:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise _ApiError(400, f"edges must be [u, v] pairs, got {item!r}")
            edges.append((_require_int(item[0], "edge endpoint"),
                          _require_int(item[1], "edge endpoint")))
        s = _require_int(body.get("s"), "s")
        t = _require_int(body.get("t"), "t")
        try:
            inst = PathInstance(DirectedGraph.from_edges(n, edges), s, t)
        except GraphError as exc:
            raise _ApiError(400, str(exc)) from None
        red = reduce(inst)
        return {"values": list(red.puzzle.values), "trace": red.trace.to_json()}

    if static_dir is not None:
        root = Path(static_dir)
        if not root.is_dir():
            raise ValueError(f"static dir {static_dir!r} does not exist")
        app.mount("/", StaticFiles(directory=str(root), html=True), name="player")

    return app
