"""A deliberately plain brute-force tiler used to cross-check the main search.

It scans columns left to right and each column bottom to top, keeps an
explicit cell grid and tests every candidate square cell by cell. Nothing
here is shared with :mod:`squared_squares.search` apart from the geometry
predicates and the symmetry bookkeeping.
"""

from __future__ import annotations

import time

from .geometry import Dissection, SquareElement, is_squared_square, is_valid, shares_full_edge
from .search import BudgetExceeded, Collector, EnumerationReport

MAX_N = 20


class OracleLimitError(ValueError):
    pass


def naive_enumerate(
    n: int,
    include_trivial: bool = False,
    deadline: float | None = None,
    collect: str = "canonical",
) -> EnumerationReport:
    """Enumerate all tilings of the ``n x n`` square with two or more squares.

    Unless ``include_trivial`` is set, only nontrivial tilings are reported,
    and a partial tiling is abandoned as soon as a new square touches an
    equal one along a full side (such a pair can never disappear again).
    ``deadline`` is an absolute :func:`time.monotonic` value.
    """
    if not 1 <= n <= MAX_N:
        raise OracleLimitError(f"oracle supports 1 <= n <= {MAX_N}, got {n}")
    start = time.perf_counter()
    grid = [[False] * n for _ in range(n)]  # grid[x][y]
    placed: list[SquareElement] = []
    sink = Collector(n, collect)
    nodes = 0

    def first_empty():
        for x in range(n):
            for y in range(n):
                if not grid[x][y]:
                    return x, y
        return None

    def fits(x: int, y: int, s: int) -> bool:
        if x + s > n or y + s > n:
            return False
        return all(not grid[i][j] for i in range(x, x + s) for j in range(y, y + s))

    def mark(e: SquareElement, value: bool) -> None:
        for i in range(e.x, e.x + e.s):
            for j in range(e.y, e.y + e.s):
                grid[i][j] = value

    def fill() -> None:
        nonlocal nodes
        cell = first_empty()
        if cell is None:
            d = Dissection(n, placed)
            if include_trivial:
                if d.order >= 2 and is_valid(d):
                    sink.add(d.elements)
            elif is_squared_square(d):
                sink.add(d.elements)
            return
        x, y = cell
        for s in range(1, n + 1):
            if not fits(x, y, s):
                break
            e = SquareElement(x, y, s)
            if not include_trivial and any(shares_full_edge(e, other) for other in placed):
                continue
            nodes += 1
            if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded(f"oracle n={n}: time budget exhausted after {nodes} nodes")
            placed.append(e)
            mark(e, True)
            fill()
            mark(e, False)
            placed.pop()

    fill()
    return sink.report(nodes, time.perf_counter() - start)
