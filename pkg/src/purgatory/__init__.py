"""Toolkit for the purgatory jump puzzle.

Move semantics, a shortest-solution solver with F/B certificates, a
streaming certificate verifier, the PATH (st-connectivity) reduction with
a round-trip validation harness, instance generators, text formats, a CLI,
and an HTTP JSON API.
"""

from .core import (
    AtGoalError,
    Certificate,
    Direction,
    EmptyListError,
    IllegalMoveError,
    InvalidPositionError,
    NonPositiveValueError,
    Puzzle,
    PuzzleError,
    ValueTooLargeError,
    apply,
    certificate_from_text,
    certificate_to_text,
    is_win,
    legal_moves,
    make_puzzle,
)
from .gen import GenerationFailedError, gen_puzzle, spiral_layout
from .graph import (
    DirectedGraph,
    GraphError,
    PathInstance,
    TooManyEdgesError,
    random_graph,
    reachable,
    witness_path,
)
from .reduction import (
    NotASolutionError,
    PreconditionViolatedError,
    ReducedInstance,
    ReductionError,
    ReductionTrace,
    decode_solution,
    degree_reduce,
    encode,
    reduce,
    relabel,
)
from .solver import (
    OracleScaleExceededError,
    PathVerdict,
    SolveResult,
    brute_force_solvable,
    replay_certificate,
    simulate_nondeterministic,
    solve,
    verify_certificate,
    verify_path,
)

__version__ = "0.1.0"
