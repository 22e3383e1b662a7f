import pytest

from purgatory.core import Puzzle

# the worked 9-cell example: solution 1,4,5,9,6,8,10
EXAMPLE_VALUES = (3, 2, 2, 1, 4, 2, 1, 2, 3)
EXAMPLE_PATH = (1, 4, 5, 9, 6, 8, 10)
EXAMPLE_CERT = "FFFBFF"


@pytest.fixture
def example_puzzle() -> Puzzle:
    return Puzzle(EXAMPLE_VALUES)


def all_simple_solutions(p: Puzzle) -> list[list[int]]:
    """Enumeration oracle: every repeat-free path from 1 to the goal.

    The game state is the position alone, so any solution can be shortened
    to one that never revisits a position; enumerating those is enough to
    know solvability and the minimum jump count.
    """
    goal = p.n + 1
    found = []

    def walk(pos, trail):
        if pos == goal:
            found.append(list(trail))
            return
        v = p.values[pos - 1]
        for target in (pos - v, pos + v):
            if 1 <= target <= goal and target not in trail:
                trail.append(target)
                walk(target, trail)
                trail.pop()

    walk(1, [1])
    return found
