"""Deterministic SVG drawings of wiring diagrams.

Wires run horizontally through their slots and fan into an X at every event
point; event ``i`` sits at ``x = (i + 1) * event_spacing`` and a wire in slot
``s`` rests at ``y = s * wire_spacing``.  Given a crossing coloring the event
marks are filled with the palette; given a line coloring the wire strokes
are.  Output is byte-identical for identical inputs.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass
from typing import Optional

from .coloring import Coloring
from .diagram import WiringDiagram, require_valid

__all__ = ["RenderSpec", "PaletteError", "render_svg", "default_palette"]


class PaletteError(ValueError):
    """The supplied palette has fewer entries than colors used."""


@dataclass(frozen=True)
class RenderSpec:
    """Layout and styling knobs for :func:`render_svg`."""

    wire_spacing: float = 28.0
    event_spacing: float = 36.0
    palette: Optional[tuple[str, ...]] = None
    labels: bool = True
    margin: float = 24.0


def default_palette(k: int) -> tuple[str, ...]:
    """``k`` evenly spaced, reasonably dark hues."""
    out = []
    for i in range(k):
        r, g, b = colorsys.hsv_to_rgb(i / max(k, 1), 0.72, 0.78)
        out.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return tuple(out)


def _num(x: float) -> str:
    return f"{x:g}"


def render_svg(
    d: WiringDiagram,
    coloring: Optional[Coloring] = None,
    spec: RenderSpec = RenderSpec(),
) -> str:
    require_valid(d)
    if coloring is not None:
        expected = len(d.events) if coloring.mode == "crossing" else d.n
        if len(coloring.colors) != expected:
            raise ValueError(
                f"coloring covers {len(coloring.colors)} items, diagram has {expected}"
            )
    k = coloring.num_colors if coloring is not None else 0
    if spec.palette is not None:
        if len(spec.palette) < k:
            raise PaletteError(
                f"palette has {len(spec.palette)} colors, coloring uses {k}"
            )
        palette = spec.palette
    else:
        palette = default_palette(k)

    es, ws, m = spec.event_spacing, spec.wire_spacing, spec.margin
    n_events = len(d.events)
    width = (n_events + 1) * es
    height = (d.n - 1) * ws

    def wire_y(slot: int) -> float:
        return slot * ws

    # Follow each wire through its events.
    slots = list(range(d.n))  # wire label - 1 -> current slot
    points: dict[int, list[tuple[float, float]]] = {
        w: [(0.0, wire_y(w - 1))] for w in range(1, d.n + 1)
    }
    marks: list[tuple[float, float]] = []
    for i, e in enumerate(d.events):
        x = (i + 1) * es
        y_center = (e.top + (e.width - 1) / 2) * ws
        marks.append((x, y_center))
        block = [w for w in range(1, d.n + 1) if e.top <= slots[w - 1] < e.top + e.width]
        for w in block:
            old = slots[w - 1]
            new = 2 * e.top + e.width - 1 - old
            points[w].append((x - es / 2, wire_y(old)))
            points[w].append((x, y_center))
            points[w].append((x + es / 2, wire_y(new)))
            slots[w - 1] = new
    for w in range(1, d.n + 1):
        points[w].append((width, wire_y(slots[w - 1])))

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_num(-m)} {_num(-m)} {_num(width + 2 * m)} {_num(height + 2 * m)}" '
        f'width="{_num(width + 2 * m)}" height="{_num(height + 2 * m)}">',
        f'<rect x="{_num(-m)}" y="{_num(-m)}" width="{_num(width + 2 * m)}" '
        f'height="{_num(height + 2 * m)}" fill="white"/>',
    ]
    for w in range(1, d.n + 1):
        if coloring is not None and coloring.mode == "line":
            stroke = palette[coloring.colors[w - 1]]
        else:
            stroke = "#222222"
        pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in points[w])
        lines.append(
            f'<polyline points="{pts}" fill="none" stroke="{stroke}" stroke-width="1.6"/>'
        )
    for i, (x, y) in enumerate(marks):
        if coloring is not None and coloring.mode == "crossing":
            fill = palette[coloring.colors[i]]
            radius = 5.0
        else:
            fill = "#000000"
            radius = 3.2
        lines.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(radius)}" fill="{fill}"/>')
    if spec.labels:
        for w in range(1, d.n + 1):
            lines.append(
                f'<text x="{_num(-8)}" y="{_num(wire_y(w - 1) + 4)}" '
                f'font-size="11" text-anchor="end" font-family="sans-serif">{w}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
