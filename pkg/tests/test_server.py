import random

import pytest
from fastapi.testclient import TestClient

from purgatory.core import Puzzle, legal_moves
from purgatory.gen import gen_puzzle
from purgatory.reduction import reduce as reduce_instance
from purgatory.server import create_app
from purgatory.graph import DirectedGraph, PathInstance

from conftest import EXAMPLE_CERT, EXAMPLE_VALUES


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(max_n=10_000))


class TestHealth:
    def test_ok(self, client):
        r = client.get("/api/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok"}


class TestPuzzleEndpoint:
    def test_matches_generator(self, client):
        r = client.get("/api/puzzle", params={"n": 12, "seed": 7})
        assert r.status_code == 200
        doc = r.json()
        assert doc["n"] == 12 and doc["seed"] == 7
        assert tuple(doc["values"]) == gen_puzzle(12, True, 7).values

    def test_unsolvable_mode(self, client):
        r = client.get("/api/puzzle", params={"n": 2, "solvable": "false", "seed": 0})
        assert r.json()["values"] == [1, 2]

    def test_missing_n(self, client):
        r = client.get("/api/puzzle")
        assert r.status_code == 400
        assert "error" in r.json()

    def test_bad_parameters(self, client):
        assert client.get("/api/puzzle", params={"n": "x"}).status_code == 400
        assert client.get("/api/puzzle", params={"n": 0}).status_code == 400
        assert client.get("/api/puzzle", params={"n": 5, "solvable": "maybe"}).status_code == 400
        assert client.get("/api/puzzle", params={"n": 5, "seed": "?"}).status_code == 400

    def test_size_cap(self, client):
        r = client.get("/api/puzzle", params={"n": 10_001})
        assert r.status_code == 413
        assert "error" in r.json()

    def test_generation_failure_surfaces(self, client):
        r = client.get("/api/puzzle", params={"n": 1, "solvable": "false"})
        assert r.status_code == 400


class TestSolveEndpoint:
    def test_reference_example(self, client):
        r = client.post("/api/solve", json={"values": list(EXAMPLE_VALUES)})
        assert r.status_code == 200
        assert r.json() == {
            "solvable": True,
            "path": [1, 4, 5, 9, 6, 8, 10],
            "certificate": EXAMPLE_CERT,
        }

    def test_unsolvable(self, client):
        r = client.post("/api/solve", json={"values": [2]})
        assert r.json() == {"solvable": False, "path": None, "certificate": None}

    def test_malformed_bodies(self, client):
        assert client.post("/api/solve", json={"values": []}).status_code == 400
        assert client.post("/api/solve", json={"values": [1, "x"]}).status_code == 400
        assert client.post("/api/solve", json={"values": [1, 0]}).status_code == 400
        assert client.post("/api/solve", json={"values": [True]}).status_code == 400
        assert client.post("/api/solve", json={}).status_code == 400
        assert client.post("/api/solve", json=[1, 2]).status_code == 400
        assert client.post(
            "/api/solve", content=b"not json", headers={"content-type": "application/json"}
        ).status_code == 400

    def test_size_cap(self, client):
        r = client.post("/api/solve", json={"values": [1] * 10_001})
        assert r.status_code == 413


class TestMovesEndpoint:
    def test_forced_first_move(self, client):
        r = client.post("/api/moves", json={"values": list(EXAMPLE_VALUES), "position": 1})
        assert r.json() == {"moves": [{"dir": "F", "to": 4}], "win": False}

    def test_both_directions(self, client):
        r = client.post("/api/moves", json={"values": list(EXAMPLE_VALUES), "position": 4})
        assert r.json() == {
            "moves": [{"dir": "B", "to": 3}, {"dir": "F", "to": 5}],
            "win": False,
        }

    def test_win_flag_when_goal_is_reachable(self, client):
        r = client.post("/api/moves", json={"values": list(EXAMPLE_VALUES), "position": 8})
        assert r.json() == {
            "moves": [{"dir": "B", "to": 6}, {"dir": "F", "to": 10}],
            "win": True,
        }

    def test_dead_cell(self, client):
        r = client.post("/api/moves", json={"values": [2], "position": 1})
        assert r.json() == {"moves": [], "win": False}

    def test_at_goal_is_an_error(self, client):
        r = client.post("/api/moves", json={"values": list(EXAMPLE_VALUES), "position": 10})
        assert r.status_code == 400
        assert r.json()["error"].startswith("AtGoal")

    def test_out_of_range_position(self, client):
        for pos in (0, 12, -3):
            r = client.post("/api/moves", json={"values": list(EXAMPLE_VALUES), "position": pos})
            assert r.status_code == 400

    def test_matches_legal_moves_everywhere(self, client):
        rng = random.Random(8)
        for _ in range(25):
            n = rng.randint(1, 30)
            p = Puzzle(tuple(rng.randint(1, n) for _ in range(n)))
            for pos in range(1, n + 1):
                r = client.post("/api/moves", json={"values": list(p.values), "position": pos})
                doc = r.json()
                want = [{"dir": d.letter, "to": q} for d, q in legal_moves(p, pos)]
                assert doc["moves"] == want
                assert doc["win"] == any(q == p.goal for _, q in legal_moves(p, pos))


class TestVerifyEndpoint:
    def test_valid(self, client):
        r = client.post(
            "/api/verify",
            json={"values": list(EXAMPLE_VALUES), "path": [1, 4, 5, 9, 6, 8, 10]},
        )
        assert r.json() == {"valid": True, "reason": None}

    def test_invalid_reason(self, client):
        r = client.post("/api/verify", json={"values": list(EXAMPLE_VALUES), "path": [1, 4, 5]})
        assert r.json() == {"valid": False, "reason": "NotAtGoal"}
        r = client.post("/api/verify", json={"values": list(EXAMPLE_VALUES), "path": [1, 4, 6]})
        assert r.json() == {"valid": False, "reason": "IllegalStep(2)"}

    def test_malformed(self, client):
        assert client.post(
            "/api/verify", json={"values": list(EXAMPLE_VALUES)}
        ).status_code == 400
        assert client.post(
            "/api/verify", json={"values": list(EXAMPLE_VALUES), "path": [1, "x"]}
        ).status_code == 400


class TestReduceEndpoint:
    def test_two_vertex_edge(self, client):
        r = client.post("/api/reduce", json={"n": 2, "edges": [[1, 2]], "s": 1, "t": 2})
        assert r.status_code == 200
        doc = r.json()
        assert doc["values"] == [9, 11, 14, 14, 14, 14, 14, 14, 7, 1, 14, 14]
        assert doc["trace"]["n"] == 2

    def test_matches_library_reduce(self, client):
        inst = PathInstance(DirectedGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)]), 2, 4)
        r = client.post(
            "/api/reduce", json={"n": 4, "edges": [[1, 2], [2, 3], [3, 4]], "s": 2, "t": 4}
        )
        assert r.json()["values"] == list(reduce_instance(inst).puzzle.values)

    def test_malformed(self, client):
        assert client.post("/api/reduce", json={"n": 0, "edges": [], "s": 1, "t": 1}).status_code == 400
        assert client.post("/api/reduce", json={"n": 2, "edges": [[1]], "s": 1, "t": 2}).status_code == 400
        assert client.post("/api/reduce", json={"n": 2, "edges": [[1, 5]], "s": 1, "t": 2}).status_code == 400
        assert client.post("/api/reduce", json={"n": 2, "edges": [], "s": 0, "t": 2}).status_code == 400
        assert client.post("/api/reduce", json={"n": 2, "edges": [], "s": 1}).status_code == 400

    def test_size_cap(self, client):
        r = client.post("/api/reduce", json={"n": 10_001, "edges": [], "s": 1, "t": 1})
        assert r.status_code == 413


class TestStaticHosting:
    def test_serves_player_files(self, tmp_path):
        (tmp_path / "index.html").write_text("<!doctype html><title>player</title>")
        app = create_app(static_dir=str(tmp_path))
        client = TestClient(app)
        r = client.get("/")
        assert r.status_code == 200
        assert "player" in r.text
        assert client.get("/api/health").json() == {"status": "ok"}

    def test_missing_dir_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            create_app(static_dir=str(tmp_path / "nope"))

    def test_no_static_by_default(self, client):
        assert client.get("/").status_code == 404
