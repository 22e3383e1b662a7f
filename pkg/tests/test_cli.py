import json
import subprocess
import sys

import pytest

from purgatory.cli import main

from conftest import EXAMPLE_CERT, EXAMPLE_VALUES

EXAMPLE_TEXT = " ".join(str(v) for v in EXAMPLE_VALUES) + "\n"


@pytest.fixture
def example_file(tmp_path):
    f = tmp_path / "puzzle.txt"
    f.write_text(EXAMPLE_TEXT)
    return str(f)


@pytest.fixture
def graph_file(tmp_path):
    f = tmp_path / "graph.txt"
    f.write_text("2 1 1 2\n1 2\n")
    return str(f)


class TestSolve:
    def test_prints_path(self, example_file, capsys):
        assert main(["solve", example_file]) == 0
        assert capsys.readouterr().out == "1 4 5 9 6 8 10\n"

    def test_certificate_flag(self, example_file, capsys):
        assert main(["solve", example_file, "--certificate"]) == 0
        assert capsys.readouterr().out == f"1 4 5 9 6 8 10\n{EXAMPLE_CERT}\n"

    def test_unsolvable_exit(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("2\n")
        assert main(["solve", str(f)]) == 1
        assert capsys.readouterr().out == "unsolvable\n"

    def test_json_output(self, example_file, capsys):
        assert main(["solve", example_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {
            "solvable": True,
            "path": [1, 4, 5, 9, 6, 8, 10],
            "certificate": EXAMPLE_CERT,
        }

    def test_missing_file(self, capsys):
        assert main(["solve", "/nonexistent/p.txt"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_malformed_file(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("not numbers\n")
        assert main(["solve", str(f)]) == 2
        assert "error:" in capsys.readouterr().err


class TestVerify:
    def test_valid_path(self, example_file, capsys):
        assert main(["verify", example_file, "--path", "1,4,5,9,6,8,10"]) == 0
        assert capsys.readouterr().out == "valid\n"

    def test_prefix_path(self, example_file, capsys):
        assert main(["verify", example_file, "--path", "1,4,5"]) == 1
        assert capsys.readouterr().out == "invalid: NotAtGoal\n"

    def test_illegal_step_named(self, example_file, capsys):
        assert main(["verify", example_file, "--path", "1,4,6"]) == 1
        assert capsys.readouterr().out == "invalid: IllegalStep(2)\n"

    def test_space_separated_path(self, example_file):
        assert main(["verify", example_file, "--path", "1 4 5 9 6 8 10"]) == 0

    def test_certificate(self, example_file, capsys):
        assert main(["verify", example_file, "--cert", EXAMPLE_CERT]) == 0
        assert capsys.readouterr().out == "valid\n"
        assert main(["verify", example_file, "--cert", "FFFBF"]) == 1

    def test_bad_letters(self, example_file, capsys):
        assert main(["verify", example_file, "--cert", "FX"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_path_tokens(self, example_file, capsys):
        assert main(["verify", example_file, "--path", "1,x"]) == 2
        assert "error:" in capsys.readouterr().err


class TestReduce:
    def test_plain_values(self, graph_file, capsys):
        assert main(["reduce", graph_file]) == 0
        assert capsys.readouterr().out == "9 11 14 14 14 14 14 14 7 1 14 14\n"

    def test_historical_constants(self, graph_file, capsys):
        assert main(["reduce", graph_file, "--paper-constants"]) == 0
        assert capsys.readouterr().out == "9 11 14 14 14 14 14 14 6 1 14 14\n"

    def test_trace_json(self, graph_file, capsys):
        assert main(["reduce", graph_file, "--trace"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["values"] == [9, 11, 14, 14, 14, 14, 14, 14, 7, 1, 14, 14]
        assert doc["trace"]["n"] == 2
        assert doc["trace"]["origin"] == {"1": 1, "2": 2}


class TestDegreeReduce:
    def test_star_graph(self, tmp_path, capsys):
        f = tmp_path / "g.txt"
        f.write_text("5 4 1 5\n1 2\n1 3\n1 4\n1 5\n")
        assert main(["degree-reduce", str(f)]) == 0
        assert capsys.readouterr().out == "7 6 1 5\n1 2\n1 6\n6 3\n6 7\n7 4\n7 5\n"


class TestGen:
    def test_puzzle_solvable_roundtrips_through_solve(self, tmp_path, capsys):
        assert main(["gen", "puzzle", "--n", "12", "--seed", "4"]) == 0
        out = capsys.readouterr().out
        f = tmp_path / "p.txt"
        f.write_text(out)
        assert main(["solve", str(f)]) == 0

    def test_puzzle_unsolvable(self, capsys):
        assert main(["gen", "puzzle", "--n", "2", "--unsolvable"]) == 0
        assert capsys.readouterr().out == "1 2\n"

    def test_unsolvable_failure_is_reported(self, capsys):
        assert main(["gen", "puzzle", "--n", "1", "--unsolvable"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_graph_defaults_endpoints(self, capsys):
        assert main(["gen", "graph", "--n", "5", "--m", "6", "--seed", "2"]) == 0
        header = capsys.readouterr().out.splitlines()[0]
        assert header == "5 6 1 5"

    def test_graph_explicit_endpoints(self, capsys):
        assert main(["gen", "graph", "--n", "5", "--m", "0", "--s", "2", "--t", "3"]) == 0
        assert capsys.readouterr().out == "5 0 2 3\n"

    def test_graph_too_many_edges(self, capsys):
        assert main(["gen", "graph", "--n", "2", "--m", "9"]) == 2
        assert "error:" in capsys.readouterr().err


class TestEquiv:
    def test_small_sweep(self, capsys):
        assert main(["equiv", "--max-vertices", "2"]) == 0
        assert capsys.readouterr().out == "16 instances checked, 0 mismatches\n"

    def test_with_random_extra(self, capsys):
        assert main(["equiv", "--max-vertices", "2", "--random", "5", "--seed", "1"]) == 0
        assert capsys.readouterr().out == "21 instances checked, 0 mismatches\n"

    def test_historical_constants_exit_nonzero(self, capsys):
        assert main(["equiv", "--max-vertices", "2", "--paper-constants"]) == 1
        out = capsys.readouterr().out
        assert "MISMATCH" in out
        assert "mismatches" in out.splitlines()[-1]


class TestSpiral:
    def test_reference_example_grid(self, example_file, capsys):
        assert main(["spiral", example_file]) == 0
        assert capsys.readouterr().out == "4 1 2\n2 3 2\n1 2 3\n"

    def test_single_cell(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("1\n")
        assert main(["spiral", str(f)]) == 0
        assert capsys.readouterr().out == "1\n"


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        f = tmp_path / "p.txt"
        f.write_text(EXAMPLE_TEXT)
        proc = subprocess.run(
            [sys.executable, "-m", "purgatory", "solve", str(f)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "1 4 5 9 6 8 10\n"
