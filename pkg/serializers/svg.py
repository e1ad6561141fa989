"""Axis-true SVG figures of a scene.

The bounding box of the scene is scaled onto a square canvas of
`settings.canvas_size` units with its aspect ratio kept, and the y axis flipped
so that "up" in the plane is up on the page. Shapes are drawn solid, probs as
dashed outlines and, on request, territories hatched.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from config import settings
from construction.scene import Scene
from geometry.exact import Rect
from shapes.pouna import materialize_territory

logger = logging.getLogger(__name__)

TEMPLATES = Path(__file__).parent / "templates"

env = Environment(
    loader=FileSystemLoader(TEMPLATES),
    autoescape=select_autoescape(["svg", "j2"]),
    keep_trailing_newline=True,
)


def _fmt(v: Fraction) -> str:
    return f"{float(v):.3f}"


class _Canvas:
    def __init__(self, bbox: Rect, size: int):
        side = max(bbox.width, bbox.height)
        self.bbox = bbox
        self.scale = Fraction(size) / side if side > 0 else Fraction(1)
        self.width = _fmt(bbox.width * self.scale)
        self.height = _fmt(bbox.height * self.scale)

    def x(self, v: Fraction) -> str:
        return _fmt((v - self.bbox.xlo) * self.scale)

    def y(self, v: Fraction) -> str:
        return _fmt((self.bbox.yhi - v) * self.scale)

    def box(self, r: Rect) -> dict:
        return {
            "x": self.x(r.xlo),
            "y": self.y(r.yhi),
            "w": _fmt(r.width * self.scale),
            "h": _fmt(r.height * self.scale),
        }

    def line(self, r: Rect) -> dict:
        return {"x1": self.x(r.xlo), "y1": self.y(r.ylo), "x2": self.x(r.xhi), "y2": self.y(r.yhi)}


def render_svg(sc: Scene, territories: bool = False, canvas_size: Optional[int] = None) -> str:
    """The scene as an SVG document; identical scenes give identical text."""
    canvas = _Canvas(sc.family.box(), settings.canvas_size if canvas_size is None else canvas_size)

    shapes = []
    for s in sc.family:
        # segments have no area and are drawn as lines
        lines = [canvas.line(r) for r in s.rects if r.width == 0 or r.height == 0]
        boxes = [canvas.box(r) for r in s.rects if r.width > 0 and r.height > 0]
        shapes.append({"id": s.id, "lines": lines, "boxes": boxes})

    cells = []
    if territories:
        for s in sc.family:
            cells.append(
                {"id": s.id, "cells": [canvas.box(c.rect) for c in materialize_territory(s)]}
            )

    probs = [{"id": p.id, **canvas.box(p.rect)} for p in sc.probs]

    logger.debug(f"Rendering {len(shapes)} shapes and {len(probs)} probs")
    return env.get_template("scene.svg.j2").render(
        width=canvas.width,
        height=canvas.height,
        shapes=shapes,
        probs=probs,
        territories=cells,
    )
