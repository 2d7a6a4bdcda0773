"""Exhaustive corner-filling search for nontrivial squared squares.

The search always covers the lowest, then leftmost, uncovered cell and
branches over every square size whose bottom-left corner can sit there.
Because of that fill order the covered region is a skyline, so the state is
just one height per column. Every tiling is produced exactly once.
"""

from __future__ import annotations

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Iterable, Sequence

from .compositions import BorderComposition, CompositionError
from .geometry import SIDES, Dissection, SquareElement, has_trivial_pair
from .symmetry import (
    SymmetryOp,
    apply,
    canonical_key,
    decode,
    inverse,
    rotation_class_count,
    transform_element,
)

log = logging.getLogger(__name__)

COLLECT_MODES = ("count_only", "canonical", "all_labeled")

# Search frame -> requested side: the search pre-fills the bottom row.
_SIDE_OPS = {
    "bottom": SymmetryOp.ID,
    "top": SymmetryOp.MV,
    "left": SymmetryOp.MD,
    "right": SymmetryOp.R90,
}


class BudgetExceeded(RuntimeError):
    """Raised when a search needs more nodes or time than it was allowed."""


@dataclass(frozen=True)
class SearchOptions:
    """Knobs for :func:`enumerate_squares`.

    ``prune_border_min`` rejects border elements smaller than 3 and corner
    elements smaller than 4. ``prune_nontrivial_incremental`` rejects a
    placement that touches an equal square along a full side. Both are sound
    for nontrivial tilings; ``include_trivial`` needs them switched off.

    ``required`` lists elements every result must contain; ``fixed_border``
    pins one whole side to a composition. ``corner_symmetry_break`` keeps only
    tilings whose bottom-left corner is a smallest corner, which finds every
    symmetry class but not every labeled tiling.
    """

    prune_border_min: bool = True
    prune_nontrivial_incremental: bool = True
    fixed_border: tuple[str, BorderComposition] | None = None
    collect: str = "canonical"
    include_trivial: bool = False
    corner_symmetry_break: bool = False
    node_budget: int | None = None
    required: tuple[SquareElement, ...] = ()

    def __post_init__(self):
        if self.collect not in COLLECT_MODES:
            raise ValueError(f"collect must be one of {COLLECT_MODES}, got {self.collect!r}")
        if self.include_trivial and (self.prune_border_min or self.prune_nontrivial_incremental):
            raise ValueError("include_trivial requires both pruning flags to be off")
        if self.corner_symmetry_break and (self.fixed_border or self.required):
            raise ValueError("corner_symmetry_break cannot be combined with border constraints")
        if self.fixed_border is not None:
            side, comp = self.fixed_border
            if side not in SIDES:
                raise ValueError(f"unknown side {side!r}; expected one of {SIDES}")
            object.__setattr__(self, "fixed_border", (side, BorderComposition(comp)))
        object.__setattr__(self, "required", tuple(SquareElement(*e) for e in self.required))

    @classmethod
    def unpruned(cls, **kw) -> "SearchOptions":
        return cls(prune_border_min=False, prune_nontrivial_incremental=False, **kw)

    @classmethod
    def all_tilings(cls, **kw) -> "SearchOptions":
        return cls.unpruned(include_trivial=True, **kw)


@dataclass
class EnumerationReport:
    n: int
    raw_count: int
    canonical_count: int
    reflection_pair_count: int
    representatives: tuple[Dissection, ...]
    nodes_expanded: int
    wall_time: float = field(default=0.0, compare=False)
    labeled: tuple[Dissection, ...] = ()
    canonical_keys: tuple[bytes, ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["representatives"] = [_dissection_dict(d) for d in self.representatives]
        out["labeled"] = [_dissection_dict(d) for d in self.labeled]
        out["canonical_keys"] = [k.hex() for k in self.canonical_keys]
        return out


def _dissection_dict(d: Dissection) -> dict:
    return {"n": d.n, "elements": [e._asdict() for e in d.elements]}


class Collector:
    """Accumulates finished tilings as canonical keys (and optionally as is).

    Tilings arrive as element tuples in scanline order. Collectors from
    separate workers combine with :meth:`merge`; the resulting report does not
    depend on the order of arrival.
    """

    def __init__(self, n: int, collect: str = "canonical"):
        self.n = n
        self.collect = collect
        self.raw = 0
        self.keys: set[bytes] = set()
        self.labeled: list[tuple] = []

    def add(self, elements: Sequence[Sequence[int]]) -> None:
        self.raw += 1
        self.keys.add(canonical_key(Dissection._trusted(self.n, elements)))
        if self.collect == "all_labeled":
            self.labeled.append(tuple(elements))

    def merge(self, other: "Collector") -> None:
        self.raw += other.raw
        self.keys |= other.keys
        self.labeled.extend(other.labeled)

    def report(self, nodes: int, wall_time: float = 0.0, op: SymmetryOp = SymmetryOp.ID) -> EnumerationReport:
        keys = tuple(sorted(self.keys))
        reps = tuple(decode(k) for k in keys)
        labeled = []
        for elems in self.labeled:
            d = Dissection._trusted(self.n, tuple(SquareElement(*e) for e in elems))
            labeled.append(d if op is SymmetryOp.ID else apply(d, op))
        return EnumerationReport(
            n=self.n,
            raw_count=self.raw,
            canonical_count=len(keys),
            reflection_pair_count=sum(rotation_class_count(d) for d in reps),
            representatives=() if self.collect == "count_only" else reps,
            nodes_expanded=nodes,
            wall_time=wall_time,
            labeled=tuple(sorted(labeled, key=lambda d: d.elements)),
            canonical_keys=keys,
        )


def summarize(n: int, tilings: Iterable[Dissection], nodes: int, collect: str = "canonical",
              wall_time: float = 0.0) -> EnumerationReport:
    """Group labeled tilings into symmetry classes and build a report."""
    sink = Collector(n, collect)
    for d in tilings:
        sink.add(d.elements)
    return sink.report(nodes, wall_time)


def _constraints(n: int, opts: SearchOptions) -> tuple[SymmetryOp, dict[tuple[int, int], int]]:
    """Required elements in the search frame plus the op back to the caller's frame."""
    op = SymmetryOp.ID
    required = list(opts.required)
    if opts.fixed_border is not None:
        side, comp = opts.fixed_border
        if comp.total != n:
            raise CompositionError(f"composition {comp} sums to {comp.total}, not {n}")
        op = _SIDE_OPS[side]
        back = inverse(op)
        required = [transform_element(e, n, back) for e in required]
        x = 0
        for s in comp:
            required.append(SquareElement(x, 0, s))
            x += s
    anchors: dict[tuple[int, int], int] = {}
    for e in required:
        if e.x < 0 or e.y < 0 or e.right > n or e.top > n:
            raise ValueError(f"required element {e} does not fit in {n}x{n}")
        if anchors.get((e.x, e.y), e.s) != e.s:
            raise ValueError(f"conflicting required elements at ({e.x}, {e.y})")
        anchors[(e.x, e.y)] = e.s
    return op, anchors


def _search(n: int, opts: SearchOptions, root_sizes: Sequence[int] | None = None):
    """Run the backtracking search; return (collector, node count)."""
    _, anchors = _constraints(n, opts)
    heights = [0] * n
    at: dict[tuple[int, int], int] = {}
    placed: list[tuple[int, int, int]] = []
    sink = Collector(n, opts.collect)
    area = n * n
    border_min = opts.prune_border_min
    incremental = opts.prune_nontrivial_incremental
    corner_break = opts.corner_symmetry_break
    keep_trivial = opts.include_trivial
    budget = opts.node_budget
    roots = None if root_sizes is None else set(root_sizes)
    nodes = 0

    def covers_other_anchor(x: int, y: int, s: int) -> bool:
        for ax, ay in anchors:
            if x <= ax < x + s and y <= ay < y + s and (ax, ay) != (x, y):
                return True
        return False

    def extend(filled: int) -> None:
        nonlocal nodes
        if filled == area:
            # full pairwise check on every finished tiling, whatever the pruning
            if keep_trivial or not has_trivial_pair(placed):
                sink.add(tuple(placed))
            return
        y = min(heights)
        x = heights.index(y)
        w = 1
        while x + w < n and heights[x + w] == y:
            w += 1
        smax = min(w, n - y, n - 1)
        forced = anchors.get((x, y)) if anchors else None
        if forced is not None:
            sizes = (forced,) if forced <= smax else ()
        else:
            sizes = range(1, smax + 1)
        for s in sizes:
            if roots is not None and filled == 0 and s not in roots:
                continue
            right, top = x + s, y + s
            if border_min and (x == 0 or y == 0 or right == n or top == n):
                if s < 3 or (s < 4 and (x == 0 or right == n) and (y == 0 or top == n)):
                    continue
            if incremental and (at.get((x - s, y)) == s or at.get((x, y - s)) == s):
                continue
            if anchors and covers_other_anchor(x, y, s):
                continue
            if corner_break and filled and (x == 0 or right == n) and (y == 0 or top == n):
                if s < placed[0][2]:
                    continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"n={n}: node budget of {budget} exhausted")
            at[(x, y)] = s
            placed.append((x, y, s))
            for c in range(x, right):
                heights[c] = top
            extend(filled + s * s)
            for c in range(x, right):
                heights[c] = y
            placed.pop()
            del at[(x, y)]

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, area + 200))
    try:
        extend(0)
    finally:
        sys.setrecursionlimit(limit)
    return sink, nodes


def _search_worker(args):
    n, opts, root_sizes = args
    return _search(n, opts, root_sizes)


def enumerate_squares(n: int, opts: SearchOptions | None = None, workers: int = 1) -> EnumerationReport:
    """Find every nontrivial squared square of side ``n`` (order >= 2).

    With ``workers > 1`` the sizes of the first square are dealt round-robin
    to separate processes and the results merged; the report is identical to a
    single-process run apart from ``wall_time``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    opts = opts or SearchOptions()
    start = time.perf_counter()
    op, _ = _constraints(n, opts)
    if workers <= 1:
        sink, nodes = _search(n, opts)
    else:
        shares = [list(range(1 + k, n + 1, workers)) for k in range(workers)]
        # one worker with a full budget each; the merged total is checked below
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_worker, [(n, opts, share) for share in shares]))
        sink = Collector(n, opts.collect)
        nodes = 0
        for part, count in parts:
            sink.merge(part)
            nodes += count
        if opts.node_budget is not None and nodes > opts.node_budget:
            raise BudgetExceeded(f"n={n}: node budget of {opts.node_budget} exhausted")
    report = sink.report(nodes, time.perf_counter() - start, op)
    log.debug("n=%d raw=%d classes=%d nodes=%d", n, report.raw_count, report.canonical_count, nodes)
    return report


def enumerate_range(lo: int, hi: int, opts: SearchOptions | None = None, workers: int = 1) -> list[EnumerationReport]:
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    return [enumerate_squares(n, opts, workers) for n in range(lo, hi + 1)]


def enumerate_with_border(
    n: int,
    comp: Sequence[int],
    opts: SearchOptions | None = None,
    side: str = "top",
    workers: int = 1,
) -> EnumerationReport:
    """Enumerate squared squares whose ``side`` reads exactly ``comp``.

    Top and bottom read left to right, left and right bottom to top.
    """
    comp = BorderComposition(comp)
    if comp.total != n:
        raise CompositionError(f"composition {comp} sums to {comp.total}, not {n}")
    opts = replace(opts or SearchOptions(), fixed_border=(side, comp))
    return enumerate_squares(n, opts, workers)
