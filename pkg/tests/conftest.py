import random

import pytest
from hypothesis import strategies as st

from squared_squares import SearchOptions, enumerate_squares
from squared_squares.geometry import Dissection
from squared_squares.serialize import fixtures


@pytest.fixture(scope="session")
def eleven() -> Dissection:
    return fixtures()["eleven"]


@pytest.fixture(scope="session")
def sixteen() -> Dissection:
    return fixtures()["sixteen"]


_labeled_cache = {}


def labeled_squares(n):
    """All labeled nontrivial squared squares of side n (cached)."""
    if n not in _labeled_cache:
        _labeled_cache[n] = enumerate_squares(n, SearchOptions(collect="all_labeled")).labeled
    return _labeled_cache[n]


def random_tiling(n, rng, max_side=None):
    """Greedy random tiling: fill the lowest-leftmost gap with a random fitting square."""
    heights = [0] * n
    elements = []
    while min(heights) < n:
        y = min(heights)
        x = heights.index(y)
        w = 1
        while x + w < n and heights[x + w] == y:
            w += 1
        limit = min(w, n - y, max_side or n)
        s = rng.randint(1, limit)
        elements.append((x, y, s))
        for c in range(x, x + s):
            heights[c] = y + s
    return Dissection(n, elements)


@st.composite
def tilings(draw, min_n=1, max_n=16):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    max_side = draw(st.sampled_from([None, 2, 3, 5]))
    return random_tiling(n, random.Random(seed), max_side)


_results = []


def record(criterion, passed, detail=""):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {detail}"
    _results.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _results:
        terminalreporter.section("acceptance criteria")
        for line in _results:
            terminalreporter.write_line(line)
