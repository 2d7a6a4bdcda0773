"""Dissection model and the definitional predicates on it.

Coordinates are integer cells with the origin at the bottom-left corner and
``y`` growing upward. An element at ``(x, y)`` with side ``s`` covers the
half-open region ``[x, x+s) x [y, y+s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple


class GeometryError(ValueError):
    """Raised when a list of squares does not form a valid dissection."""


class SquareElement(NamedTuple):
    x: int
    y: int
    s: int

    @property
    def right(self) -> int:
        return self.x + self.s

    @property
    def top(self) -> int:
        return self.y + self.s


def scanline_key(e: SquareElement) -> tuple[int, int]:
    return (e.y, e.x)


@dataclass(frozen=True)
class Dissection:
    """An ``n x n`` square together with its elements in scanline order.

    Construction normalizes element order and checks that every element has a
    positive side and fits inside the square. Overlap and coverage are checked
    by :func:`validate`, so partial tilings can be represented too.
    """

    n: int
    elements: tuple[SquareElement, ...]

    def __init__(self, n: int, elements: Iterable[Iterable[int]]):
        if n < 1:
            raise GeometryError(f"side length must be >= 1, got {n}")
        elems = tuple(sorted((SquareElement(*map(int, e)) for e in elements), key=scanline_key))
        for e in elems:
            if e.s < 1:
                raise GeometryError(f"element {e} has non-positive side")
            if e.x < 0 or e.y < 0 or e.right > n or e.top > n:
                raise GeometryError(f"element {e} does not fit in {n}x{n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "elements", elems)

    @classmethod
    def _trusted(cls, n: int, elements: tuple[SquareElement, ...]) -> "Dissection":
        """Skip normalization for elements already in scanline order and in bounds."""
        d = object.__new__(cls)
        object.__setattr__(d, "n", n)
        object.__setattr__(d, "elements", elements)
        return d

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def sizes(self) -> list[int]:
        return [e.s for e in self.elements]


@dataclass(frozen=True)
class Classification:
    order: int
    perfect: bool
    simple: bool
    trivial: bool
    border_touch_count: int


def paint(n: int, elements: Iterable[SquareElement]) -> list[list[int]]:
    """Count how many elements cover each cell; ``grid[y][x]``."""
    grid = [[0] * n for _ in range(n)]
    for e in elements:
        for yy in range(e.y, e.top):
            row = grid[yy]
            for xx in range(e.x, e.right):
                row[xx] += 1
    return grid


def validate(d: Dissection, complete: bool = True) -> None:
    """Raise :class:`GeometryError` unless ``d`` is interior-disjoint.

    With ``complete`` (the default) the elements must also cover every cell,
    which is checked both by area and by painting the grid.
    """
    grid = paint(d.n, d.elements)
    for y, row in enumerate(grid):
        for x, count in enumerate(row):
            if count > 1:
                raise GeometryError(f"cell ({x}, {y}) covered {count} times")
            if complete and count == 0:
                raise GeometryError(f"cell ({x}, {y}) is not covered")
    if complete and sum(e.s * e.s for e in d.elements) != d.n * d.n:
        raise GeometryError("element areas do not sum to the square's area")


def is_valid(d: Dissection) -> bool:
    try:
        validate(d)
    except GeometryError:
        return False
    return True


def shares_full_edge(a: SquareElement, b: SquareElement) -> bool:
    """True when ``a`` and ``b`` have equal size and touch along a whole side."""
    if a.s != b.s:
        return False
    if a.y == b.y and (a.right == b.x or b.right == a.x):
        return True
    return a.x == b.x and (a.top == b.y or b.top == a.y)


def has_trivial_pair(elements: Iterable[SquareElement]) -> bool:
    """Pairwise check that works on any element sequence, complete or not."""
    by_size: dict[int, list[SquareElement]] = {}
    for e in elements:
        by_size.setdefault(e[2], []).append(SquareElement(*e))
    return any(
        shares_full_edge(a, b) for group in by_size.values() for a, b in combinations(group, 2)
    )


def trivial_pairs(d: Dissection) -> list[tuple[SquareElement, SquareElement]]:
    by_size: dict[int, list[SquareElement]] = {}
    for e in d.elements:
        by_size.setdefault(e.s, []).append(e)
    return [
        (a, b)
        for group in by_size.values()
        for a, b in combinations(group, 2)
        if shares_full_edge(a, b)
    ]


def is_nontrivial(d: Dissection) -> bool:
    return not trivial_pairs(d)


def is_perfect(d: Dissection) -> bool:
    sizes = d.sizes()
    return len(set(sizes)) == len(sizes)


def touches_border(e: SquareElement, n: int) -> bool:
    return e.x == 0 or e.y == 0 or e.right == n or e.top == n


def border_elements(d: Dissection) -> list[SquareElement]:
    return [e for e in d.elements if touches_border(e, d.n)]


def element_at(d: Dissection, x: int, y: int) -> SquareElement:
    for e in d.elements:
        if e.x <= x < e.right and e.y <= y < e.top:
            return e
    raise GeometryError(f"no element covers cell ({x}, {y})")


def corner_elements(d: Dissection) -> list[SquareElement]:
    """Elements covering the bottom-left, bottom-right, top-left, top-right cells."""
    m = d.n - 1
    return [element_at(d, x, y) for x, y in ((0, 0), (m, 0), (0, m), (m, m))]


SIDES = ("bottom", "top", "left", "right")


def border_sizes(d: Dissection, side: str) -> tuple[int, ...]:
    """Sizes of the elements along one side, in increasing coordinate order.

    ``bottom`` and ``top`` read left to right, ``left`` and ``right`` read
    bottom to top.
    """
    n = d.n
    if side == "bottom":
        picked = sorted((e.x, e.s) for e in d.elements if e.y == 0)
    elif side == "top":
        picked = sorted((e.x, e.s) for e in d.elements if e.top == n)
    elif side == "left":
        picked = sorted((e.y, e.s) for e in d.elements if e.x == 0)
    elif side == "right":
        picked = sorted((e.y, e.s) for e in d.elements if e.right == n)
    else:
        raise ValueError(f"unknown side {side!r}; expected one of {SIDES}")
    return tuple(s for _, s in picked)


def _tiles_rectangle(elements: list[SquareElement], x0: int, y0: int, x1: int, y1: int) -> bool:
    area = 0
    count = 0
    for e in elements:
        if e.right <= x0 or e.x >= x1 or e.top <= y0 or e.y >= y1:
            continue
        if e.x < x0 or e.right > x1 or e.y < y0 or e.top > y1:
            return False
        area += e.s * e.s
        count += 1
    # Containment plus disjointness makes equal area an exact tiling.
    return count >= 2 and area == (x1 - x0) * (y1 - y0)


def is_simple(d: Dissection) -> bool:
    """True if no proper subrectangle is itself tiled by two or more elements.

    Candidate rectangles only use coordinates that occur as element edges,
    since the sides of a tiled subrectangle are unions of element sides.
    """
    xs = sorted({c for e in d.elements for c in (e.x, e.right)})
    ys = sorted({c for e in d.elements for c in (e.y, e.top)})
    elements = list(d.elements)
    for i, x0 in enumerate(xs):
        for x1 in xs[i + 1:]:
            for j, y0 in enumerate(ys):
                for y1 in ys[j + 1:]:
                    if (x0, y0, x1, y1) == (0, 0, d.n, d.n):
                        continue
                    if _tiles_rectangle(elements, x0, y0, x1, y1):
                        return False
    return True


def classify(d: Dissection) -> Classification:
    trivial = not is_nontrivial(d)
    return Classification(
        order=d.order,
        perfect=is_perfect(d),
        simple=is_simple(d),
        trivial=trivial,
        border_touch_count=len(border_elements(d)),
    )


def is_squared_square(d: Dissection) -> bool:
    """A valid nontrivial dissection with at least two elements."""
    return d.order >= 2 and is_valid(d) and is_nontrivial(d)
