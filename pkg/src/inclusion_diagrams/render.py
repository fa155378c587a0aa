"""Nested-rectangle inclusion diagrams, as SVG or bracket text.

The innermost rectangle is the first set of the chain and each later set
wraps the one before it. Rectangles are always drawn strictly nested even
though two neighbouring sets may in fact be equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .solver import Proof

CORE_WIDTH = 160
CORE_HEIGHT = 60
PADDING = 40
MARGIN = 20
LABEL_INSET = 6
FONT_SIZE = 14
ASCII_WIDTH = 72


@dataclass(frozen=True)
class Box:
    label: str
    x: int
    y: int
    w: int
    h: int

    @property
    def label_x(self) -> int:
        return self.x + LABEL_INSET

    @property
    def label_y(self) -> int:
        # text baseline
        return self.y + LABEL_INSET + FONT_SIZE

    def contains(self, other: Box) -> bool:
        return (other.x > self.x and other.y > self.y
                and other.x + other.w < self.x + self.w
                and other.y + other.h < self.y + self.h)


@dataclass(frozen=True)
class DiagramLayout:
    boxes: tuple[Box, ...]  # innermost first
    canvas: tuple[int, int]


def layout_labels(labels: tuple[str, ...] | list[str]) -> DiagramLayout:
    if not labels:
        raise ValueError("a diagram needs at least one set")
    n = len(labels)
    boxes = []
    for i, label in enumerate(labels):
        depth = n - 1 - i  # 0 for the outermost box
        boxes.append(Box(
            label,
            MARGIN + depth * PADDING,
            MARGIN + depth * PADDING,
            CORE_WIDTH + 2 * PADDING * i,
            CORE_HEIGHT + 2 * PADDING * i,
        ))
    outer = boxes[-1]
    return DiagramLayout(tuple(boxes), (outer.w + 2 * MARGIN, outer.h + 2 * MARGIN))


def layout_chain(p: Proof) -> DiagramLayout:
    return layout_labels(p.labels)


def emit_svg(d: DiagramLayout) -> str:
    width, height = d.canvas
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<desc>Inclusion diagram: each rectangle is included in the one around it. "
        "Neighbouring boundaries may coincide.</desc>",
    ]
    for box in reversed(d.boxes):
        out.append(
            f'<rect x="{box.x}" y="{box.y}" width="{box.w}" height="{box.h}" '
            f'fill="none" stroke="black" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{box.label_x}" y="{box.label_y}" font-family="sans-serif" '
            f'font-size="{FONT_SIZE}">{escape(box.label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_ascii(d: DiagramLayout) -> str:
    """``[ outer [ middle [ inner ] ] ]``, one level per line if too wide."""
    outer_first = [b.label for b in reversed(d.boxes)]
    flat = " ".join(f"[ {label}" for label in outer_first) + " ]" * len(outer_first)
    if len(flat) <= ASCII_WIDTH:
        return flat + "\n"
    n = len(outer_first)
    lines = [f"{'  ' * i}[ {label}" for i, label in enumerate(outer_first)]
    lines[-1] += " ]"
    lines += [f"{'  ' * i}]" for i in reversed(range(n - 1))]
    return "\n".join(lines) + "\n"
