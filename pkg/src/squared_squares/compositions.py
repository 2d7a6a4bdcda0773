"""Border compositions: the ordered side lengths along one side of a square.

A composition is admissible when its two corner parts are at least 4, every
part is at least 3 and no two neighbouring parts are equal. The filters below
each rule out a local border pattern that no nontrivial squared square can
contain.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence


class CompositionError(ValueError):
    """Raised for malformed compositions or unknown filter names."""


class BorderComposition(tuple):
    """Immutable tuple of positive part sizes, printed as ``4+3+4``."""

    def __new__(cls, parts: Iterable[int] | str):
        if isinstance(parts, str):
            return cls.parse(parts)
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise CompositionError("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise CompositionError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "BorderComposition":
        try:
            return cls(int(p) for p in text.replace(",", "+").split("+"))
        except ValueError as exc:
            raise CompositionError(f"cannot parse composition {text!r}") from exc

    @property
    def total(self) -> int:
        return sum(self)

    def reversed(self) -> "BorderComposition":
        return BorderComposition(self[::-1])

    def __str__(self) -> str:
        return "+".join(map(str, self))

    def __repr__(self) -> str:
        return f"BorderComposition({str(self)!r})"


def border_compositions(
    n: int, min_parts: int = 1, max_parts: int | None = None
) -> list[BorderComposition]:
    """All admissible compositions of ``n`` in ascending lexicographic order."""
    if n < 1 or min_parts < 1:
        raise CompositionError("n and min_parts must be >= 1")
    out: list[BorderComposition] = []
    prefix: list[int] = []

    def extend(remaining: int) -> None:
        if remaining == 0:
            if len(prefix) >= min_parts:
                out.append(BorderComposition(prefix))
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        low = 4 if not prefix else 3
        prev = prefix[-1] if prefix else 0
        for p in range(low, remaining + 1):
            rest = remaining - p
            # whatever follows must still end in a corner part of size >= 4
            if p == prev or (rest == 0 and p < 4) or 0 < rest < 4:
                continue
            prefix.append(p)
            extend(rest)
            prefix.pop()

    extend(n)
    return out


def _corner_min4(c: Sequence[int]) -> bool:
    return c[0] >= 4 and c[-1] >= 4


def _inner_min3(c: Sequence[int]) -> bool:
    return all(p >= 3 for p in c[1:-1])


def _triples(c: Sequence[int]):
    return zip(c, c[1:], c[2:])


def _no_x3y(c: Sequence[int]) -> bool:
    return not any(m == 3 and a >= 5 and b >= 5 for a, m, b in _triples(c))


def _no_corner4_neighbor6(c: Sequence[int]) -> bool:
    if len(c) < 2:
        return True
    return not ((c[0] == 4 and c[1] >= 6) or (c[-1] == 4 and c[-2] >= 6))


def _no_fourthree_x(c: Sequence[int]) -> bool:
    if len(c) < 3:
        return True
    head = c[0] == 4 and c[1] == 3 and c[2] >= 6
    tail = c[-1] == 4 and c[-2] == 3 and c[-3] >= 6
    return not (head or tail)


def _no_x4y(c: Sequence[int]) -> bool:
    return not any(m == 4 and a >= 6 and b >= 6 for a, m, b in _triples(c))


def _reversal_dedupe(c: Sequence[int]) -> bool:
    return tuple(c) <= tuple(c[::-1])


FILTERS: dict[str, Callable[[Sequence[int]], bool]] = {
    "corner_min4": _corner_min4,
    "inner_min3": _inner_min3,
    "x3y": _no_x3y,
    "corner4_neighbor6": _no_corner4_neighbor6,
    "fourthree_x": _no_fourthree_x,
    "x4y": _no_x4y,
    "reversal_dedupe": _reversal_dedupe,
}

# The filters that encode impossibility results, as opposed to bookkeeping.
LEMMA_FILTERS = ("x3y", "corner4_neighbor6", "fourthree_x", "x4y")


def filter_compositions(
    compositions: Iterable[Sequence[int]], filters: Iterable[str] = tuple(FILTERS)
) -> list[BorderComposition]:
    """Keep the compositions accepted by every named filter, preserving order."""
    names = list(filters)
    unknown = [f for f in names if f not in FILTERS]
    if unknown:
        raise CompositionError(f"unknown filter(s): {', '.join(unknown)}")
    preds = [FILTERS[f] for f in names]
    return [BorderComposition(c) for c in compositions if all(p(c) for p in preds)]


def rejecting_filters(c: Sequence[int], filters: Iterable[str] = LEMMA_FILTERS) -> list[str]:
    return [f for f in filters if not FILTERS[f](c)]
