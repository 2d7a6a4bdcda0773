"""Text, JSON and Bouwkamp-code representations of dissections."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .geometry import Dissection, GeometryError, SquareElement, validate


class ParseError(ValueError):
    pass


# -- line-oriented text format ------------------------------------------------

def dumps(d: Dissection, comment: str | None = None) -> str:
    lines = [f"# {line}" for line in comment.splitlines()] if comment else []
    lines.append(f"n={d.n}")
    lines.extend(f"{e.x} {e.y} {e.s}" for e in d.elements)
    return "\n".join(lines) + "\n"


def loads(text: str, check: bool = True) -> Dissection:
    """Parse the ``n=<N>`` / ``x y s`` format; ``#`` starts a comment."""
    n = None
    elements = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.fullmatch(r"n\s*=\s*(\d+)", line)
            if not m:
                raise ParseError(f"line {lineno}: expected header 'n=<N>', got {raw!r}")
            n = int(m.group(1))
            continue
        fields = line.split()
        if len(fields) != 3 or not all(f.isdigit() for f in fields):
            raise ParseError(f"line {lineno}: expected 'x y s', got {raw!r}")
        elements.append(SquareElement(*map(int, fields)))
    if n is None:
        raise ParseError("missing 'n=<N>' header")
    d = Dissection(n, elements)
    if check:
        validate(d)
    return d


def load(path) -> Dissection:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return loads(text)


# -- JSON ---------------------------------------------------------------------

def to_document(d: Dissection, source: str | None = None, canonical: bool | None = None) -> dict:
    doc = {"n": d.n, "elements": [e._asdict() for e in d.elements]}
    meta = {k: v for k, v in (("source", source), ("canonical", canonical)) if v is not None}
    if meta:
        doc["metadata"] = meta
    return doc


def from_document(doc: dict) -> Dissection:
    try:
        d = Dissection(doc["n"], ((e["x"], e["y"], e["s"]) for e in doc["elements"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed dissection document: {exc}") from exc
    validate(d)
    return d


def to_json(d: Dissection, **meta) -> str:
    return json.dumps(to_document(d, **meta))


def from_json(text: str) -> Dissection:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    return from_document(doc)


# -- Bouwkamp code ------------------------------------------------------------

@dataclass(frozen=True)
class BouwkampCode:
    """Element sizes grouped into horizontal runs, read from the top down.

    Squares are listed in the order their top-left corners are reached by
    repeatedly taking the uppermost, then leftmost, uncovered cell. Squares
    whose tops lie on the same level and that sit side by side form one group.
    """

    rows: tuple[tuple[int, ...], ...]

    def sizes(self) -> list[int]:
        return [s for row in self.rows for s in row]

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, row)) + ")" for row in self.rows)

    @classmethod
    def parse(cls, text: str) -> "BouwkampCode":
        compact = re.sub(r"\s+", "", text)
        if not re.fullmatch(r"(\(\d+(,\d+)*\))+", compact):
            raise ParseError(f"malformed Bouwkamp code {text!r}")
        rows = tuple(tuple(int(s) for s in g.split(",")) for g in re.findall(r"\(([^)]*)\)", compact))
        if any(s < 1 for row in rows for s in row):
            raise ParseError("Bouwkamp sizes must be positive")
        return cls(rows)


def to_bouwkamp(d: Dissection) -> BouwkampCode:
    # top edge measured downward from the top of the square
    keyed = sorted((d.n - e.top, e.x, e.s) for e in d.elements)
    rows: list[list[int]] = []
    prev = None
    for depth, x, s in keyed:
        if prev is not None and prev[0] == depth and prev[1] == x:
            rows[-1].append(s)
        else:
            rows.append([s])
        prev = (depth, x + s)
    return BouwkampCode(tuple(tuple(r) for r in rows))


def from_bouwkamp(code: BouwkampCode | str, n: int) -> Dissection:
    """Rebuild a dissection by placing each size at the uppermost-leftmost gap."""
    if isinstance(code, str):
        code = BouwkampCode.parse(code)
    depth = [0] * n
    elements = []
    for s in code.sizes():
        top = min(depth) if n else 0
        if top >= n:
            raise GeometryError("Bouwkamp code has more squares than fit")
        x = depth.index(top)
        if x + s > n or top + s > n or any(depth[c] != top for c in range(x, x + s)):
            raise GeometryError(f"square of size {s} does not fit at column {x}, depth {top}")
        for c in range(x, x + s):
            depth[c] = top + s
        elements.append(SquareElement(x, n - top - s, s))
    if any(v != n for v in depth):
        raise GeometryError("Bouwkamp code does not cover the square")
    d = Dissection(n, elements)
    if to_bouwkamp(d) != code:
        raise ParseError(f"grouping of {code} does not match its own geometry")
    return d


# -- fixtures -----------------------------------------------------------------

def _fixture(name: str) -> Dissection:
    text = resources.files("squared_squares").joinpath("data", f"{name}.txt").read_text()
    return loads(text)


def fixtures() -> dict[str, Dissection]:
    """The two reference dissections of sides 11 and 16."""
    return {"eleven": _fixture("eleven"), "sixteen": _fixture("sixteen")}
