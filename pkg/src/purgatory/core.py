"""Exact move semantics of the purgatory jump puzzle.

A puzzle is a list of n positive numbers, 1-indexed.  Play starts on
position 1.  Standing on position j that holds value i, the two possible
jumps are to position j-i (backward) and j+i (forward), each legal only
if the target stays within 1..n+1.  Position n+1 lies just past the end
of the list and is the goal: reaching it solves the puzzle.

Everything in this module is an immutable value; all functions are pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

# Cells hold unsigned 64-bit integers.  Any value > n is a dead cell, so the
# cap loses no solvability information for any puzzle that fits in memory.
VALUE_CAP = 2**64 - 1


class PuzzleError(Exception):
    """Base class for puzzle rule violations."""


class EmptyListError(PuzzleError):
    """A puzzle needs at least one cell."""


class NonPositiveValueError(PuzzleError):
    """A cell value was zero or negative."""

    def __init__(self, index: int, value: int):
        self.index = index  # 1-indexed cell
        self.value = value
        super().__init__(f"cell {index} holds {value}; every value must be >= 1")


class ValueTooLargeError(PuzzleError):
    """A cell value exceeded the 64-bit cap."""

    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"cell {index} holds {value}, above the cap {VALUE_CAP}")


class InvalidPositionError(PuzzleError):
    """A position outside 1..n+1 was supplied."""


class AtGoalError(PuzzleError):
    """No moves exist from the goal position n+1."""


class IllegalMoveError(PuzzleError):
    """The requested jump leaves the 1..n+1 range."""


class Direction(enum.Enum):
    """A jump choice: backward (j-i) or forward (j+i)."""

    BACKWARD = "B"
    FORWARD = "F"

    @property
    def letter(self) -> str:
        return self.value


# A certificate is the sequence of direction choices witnessing a solution.
Certificate = tuple[Direction, ...]


def certificate_to_text(cert: Certificate) -> str:
    """Render a certificate as a string like ``"FFFBFF"``."""
    return "".join(d.letter for d in cert)


def certificate_from_text(text: str) -> Certificate:
    """Parse a string of ``F``/``B`` letters into a certificate."""
    steps = []
    for ch in text:
        if ch == "F":
            steps.append(Direction.FORWARD)
        elif ch == "B":
            steps.append(Direction.BACKWARD)
        else:
            raise ValueError(f"bad certificate letter {ch!r}; expected 'F' or 'B'")
    return tuple(steps)


@dataclass(frozen=True)
class Puzzle:
    """An immutable list of positive cell values; positions are 1-indexed."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) == 0:
            raise EmptyListError("a puzzle needs at least one value")
        for idx, v in enumerate(self.values, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise NonPositiveValueError(idx, v)
            if v < 1:
                raise NonPositiveValueError(idx, v)
            if v > VALUE_CAP:
                raise ValueTooLargeError(idx, v)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def goal(self) -> int:
        """The winning position, one past the list."""
        return len(self.values) + 1

    def value_at(self, pos: int) -> int:
        """Value held by cell ``pos`` (1-indexed); usable as a verifier accessor."""
        if not 1 <= pos <= len(self.values):
            raise InvalidPositionError(f"position {pos} outside 1..{len(self.values)}")
        return self.values[pos - 1]


def make_puzzle(values: Iterable[int]) -> Puzzle:
    """Build a puzzle, rejecting empty lists and non-positive values."""
    return Puzzle(tuple(values))


def legal_moves(p: Puzzle, pos: int) -> tuple[tuple[Direction, int], ...]:
    """All legal jumps from ``pos``, backward first.

    Returns 0, 1, or 2 ``(direction, target)`` pairs.  The goal position has
    no moves and raises :class:`AtGoalError`.
    """
    n = p.n
    if pos == n + 1:
        raise AtGoalError(f"position {pos} is the goal; no moves exist")
    if not 1 <= pos <= n:
        raise InvalidPositionError(f"position {pos} outside 1..{n + 1}")
    v = p.values[pos - 1]
    moves = []
    if pos - v >= 1:
        moves.append((Direction.BACKWARD, pos - v))
    if pos + v <= n + 1:
        moves.append((Direction.FORWARD, pos + v))
    return tuple(moves)


def apply(p: Puzzle, pos: int, d: Direction) -> int:
    """Execute one jump; raises :class:`IllegalMoveError` if it leaves 1..n+1."""
    n = p.n
    if pos == n + 1:
        raise AtGoalError(f"position {pos} is the goal; no moves exist")
    if not 1 <= pos <= n:
        raise InvalidPositionError(f"position {pos} outside 1..{n + 1}")
    v = p.values[pos - 1]
    target = pos - v if d is Direction.BACKWARD else pos + v
    if not 1 <= target <= n + 1:
        raise IllegalMoveError(
            f"jump {d.letter} from {pos} (value {v}) lands on {target}, outside 1..{n + 1}"
        )
    return target


def is_win(p: Puzzle, pos: int) -> bool:
    """True iff ``pos`` is the goal position n+1."""
    return pos == p.n + 1
