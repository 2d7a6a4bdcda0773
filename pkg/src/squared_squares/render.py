"""SVG rendering of a dissection."""

from __future__ import annotations

from .geometry import Dissection


def to_svg(d: Dissection, cell_px: int = 20) -> str:
    """One labelled ``<rect>`` per element; screen y grows downward."""
    if cell_px < 1:
        raise ValueError("cell_px must be >= 1")
    side = d.n * cell_px
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<rect x="0" y="0" width="{side}" height="{side}" fill="white"/>',
    ]
    font = max(cell_px // 2, 1)
    for e in d.elements:
        x = e.x * cell_px
        y = (d.n - e.y - e.s) * cell_px
        w = e.s * cell_px
        out.append(
            f'<rect class="element" x="{x}" y="{y}" width="{w}" height="{w}" '
            f'fill="none" stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{x + w / 2:g}" y="{y + w / 2:g}" font-size="{font}" '
            f'text-anchor="middle" dominant-baseline="central">{e.s}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
