"""The eight symmetries of the square acting on dissections."""

from __future__ import annotations

import struct
from enum import Enum

from .geometry import Dissection, SquareElement, scanline_key


class SymmetryOp(str, Enum):
    """Rotations are counterclockwise; ``mh`` flips left-right, ``mv`` top-bottom,
    ``md`` transposes across the main diagonal and ``ma`` across the other one."""

    ID = "id"
    R90 = "r90"
    R180 = "r180"
    R270 = "r270"
    MH = "mh"
    MV = "mv"
    MD = "md"
    MA = "ma"

    @property
    def is_rotation(self) -> bool:
        return self in ROTATIONS


# Linear part acting on coordinates measured from the centre of the square.
_MATRICES = {
    SymmetryOp.ID: (1, 0, 0, 1),
    SymmetryOp.R90: (0, -1, 1, 0),
    SymmetryOp.R180: (-1, 0, 0, -1),
    SymmetryOp.R270: (0, 1, -1, 0),
    SymmetryOp.MH: (-1, 0, 0, 1),
    SymmetryOp.MV: (1, 0, 0, -1),
    SymmetryOp.MD: (0, 1, 1, 0),
    SymmetryOp.MA: (0, -1, -1, 0),
}
_BY_MATRIX = {m: op for op, m in _MATRICES.items()}

ALL_OPS = tuple(SymmetryOp)
ROTATIONS = (SymmetryOp.ID, SymmetryOp.R90, SymmetryOp.R180, SymmetryOp.R270)


def compose(first: SymmetryOp, then: SymmetryOp) -> SymmetryOp:
    """The single op equal to applying ``first`` and then ``then``."""
    a, b, c, d = _MATRICES[then]
    e, f, g, h = _MATRICES[first]
    return _BY_MATRIX[(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)]


def inverse(op: SymmetryOp) -> SymmetryOp:
    return next(g for g in ALL_OPS if compose(op, g) is SymmetryOp.ID)


# Bottom-left corner of the image of the element (x, y, s); same action as _MATRICES.
_CORNER_MAPS = {
    SymmetryOp.ID: lambda x, y, s, n: (x, y),
    SymmetryOp.R90: lambda x, y, s, n: (n - y - s, x),
    SymmetryOp.R180: lambda x, y, s, n: (n - x - s, n - y - s),
    SymmetryOp.R270: lambda x, y, s, n: (y, n - x - s),
    SymmetryOp.MH: lambda x, y, s, n: (n - x - s, y),
    SymmetryOp.MV: lambda x, y, s, n: (x, n - y - s),
    SymmetryOp.MD: lambda x, y, s, n: (y, x),
    SymmetryOp.MA: lambda x, y, s, n: (n - y - s, n - x - s),
}


def _scanline(elements) -> tuple[SquareElement, ...]:
    return tuple(sorted(elements, key=scanline_key))


def _image(elements, n: int, op: SymmetryOp) -> tuple[SquareElement, ...]:
    f = _CORNER_MAPS[op]
    return _scanline(SquareElement(*f(x, y, s, n), s) for x, y, s in elements)


def transform_element(e: SquareElement, n: int, op: SymmetryOp) -> SquareElement:
    a, b, c, d = _MATRICES[op]
    # Work in doubled coordinates so the centre of every element is integral.
    u = 2 * e.x + e.s - n
    v = 2 * e.y + e.s - n
    u2, v2 = a * u + b * v, c * u + d * v
    return SquareElement((u2 + n - e.s) // 2, (v2 + n - e.s) // 2, e.s)


def apply(d: Dissection, op: SymmetryOp | str) -> Dissection:
    return Dissection._trusted(d.n, _image(d.elements, d.n, SymmetryOp(op)))


CanonicalKey = bytes


def _pack_key(n: int, packed: list[int]) -> bytes:
    return struct.pack(f">HH{len(packed)}I", n, len(packed), *packed)


def encode(d: Dissection) -> bytes:
    """Byte encoding of ``d`` as it stands (not canonicalized)."""
    return _pack_key(d.n, _packed_images(d, ops=1)[0])


def decode(key: bytes) -> Dissection:
    n, count = struct.unpack_from(">HH", key)
    packed = struct.unpack_from(f">{count}I", key, 4)
    return Dissection._trusted(
        n, tuple(SquareElement((p >> 8) & 0xFF, p >> 16, p & 0xFF) for p in packed)
    )


def _packed_images(d: Dissection, ops: int = 8) -> list[list[int]]:
    """All eight images as sorted lists of ``(y << 16) | (x << 8) | s``.

    Sorting the packed values gives scanline order, so comparing the lists
    compares scanline element lists. Lists are indexed like ``ALL_OPS``;
    ``ops=1`` computes only the identity image.
    """
    n = d.n
    if n > 0xFF:
        raise ValueError("canonical forms support n <= 255")
    if ops == 1:
        return [sorted((y << 16) | (x << 8) | s for x, y, s in d.elements)]
    imgs: list[list[int]] = [[] for _ in ALL_OPS]
    i0, i1, i2, i3, i4, i5, i6, i7 = imgs
    for x, y, s in d.elements:
        a = n - x - s
        b = n - y - s
        i0.append((y << 16) | (x << 8) | s)
        i1.append((x << 16) | (b << 8) | s)
        i2.append((b << 16) | (a << 8) | s)
        i3.append((a << 16) | (y << 8) | s)
        i4.append((y << 16) | (a << 8) | s)
        i5.append((b << 16) | (x << 8) | s)
        i6.append((x << 16) | (y << 8) | s)
        i7.append((a << 16) | (b << 8) | s)
    for img in imgs:
        img.sort()
    return imgs


def canonical_form(d: Dissection) -> tuple[SymmetryOp, Dissection]:
    """The op and image whose scanline element list is least.

    Elements are compared as ``(y, x, s)``; any fixed total order would do.
    """
    imgs = _packed_images(d)
    best = min(range(len(imgs)), key=imgs.__getitem__)
    return ALL_OPS[best], decode(_pack_key(d.n, imgs[best]))


def canonical_key(d: Dissection) -> CanonicalKey:
    """Equal for two dissections exactly when one is a symmetry image of the other."""
    return _pack_key(d.n, min(_packed_images(d)))


def stabilizer(d: Dissection) -> list[SymmetryOp]:
    return [op for op in ALL_OPS if apply(d, op).elements == d.elements]


def orbit_size(d: Dissection) -> int:
    return len(ALL_OPS) // len(stabilizer(d))


def rotation_class_count(d: Dissection) -> int:
    """How many classes the D4-orbit of ``d`` splits into under rotations alone.

    This is 1 when ``d`` equals a rotation of its own mirror image, else 2.
    """
    return 1 if any(not op.is_rotation for op in stabilizer(d)) else 2
