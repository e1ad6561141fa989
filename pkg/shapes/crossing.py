"""Crossings of rects by shapes, right extensions and subterritories."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from errors import GeometryError, ShapeError
from geometry.arrangement import Arrangement
from geometry.exact import Rect
from shapes.pouna import Shape, is_strong, territory_contains

logger = logging.getLogger(__name__)


def crossing_witness(s: Shape, R: Rect, vertical: bool = True) -> Optional[list[Rect]]:
    """Faces of a component of s ∩ R touching both bottom and top of R (or left and right).

    Returns the closures of the component's faces, or None when s does not cross R.
    """
    if (vertical and R.height == 0) or (not vertical and R.width == 0):
        raise GeometryError("degenerate-rect", "cannot cross a rect of zero extent")
    if not s.region.intersects_rect(R):
        return None
    arr = Arrangement.of(s.region, R)
    window = arr.span(R)
    labels, count = Arrangement.components(arr.cover(s.region)[window])
    if count == 0:
        return None
    if vertical:
        first, last = labels[:, 0], labels[:, -1]
    else:
        first, last = labels[0, :], labels[-1, :]
    common = np.intersect1d(first[first > 0], last[last > 0])
    if common.size == 0:
        return None
    ii, jj = np.nonzero(labels == common[0])
    x0, y0 = window[0].start, window[1].start
    return [arr.face(int(i) + x0, int(j) + y0) for i, j in zip(ii, jj)]


def crosses_vertically(s: Shape, R: Rect) -> bool:
    return crossing_witness(s, R, vertical=True) is not None


def crosses_horizontally(s: Shape, R: Rect) -> bool:
    return crossing_witness(s, R, vertical=False) is not None


def right_extension(E: Rect, R: Rect) -> Rect:
    """[r(E), r(R)] x [b(E), t(E)]."""
    if not R.contains(E):
        raise ShapeError("not-nested", f"{E.as_strings()} is not inside {R.as_strings()}")
    return Rect(E.xhi, R.xhi, E.ylo, E.yhi)


@dataclass(frozen=True)
class SubterritoryCert:
    rect: Rect
    crossing_witness: list[Rect]

    def validate(self, s: Shape) -> bool:
        return is_subterritory(self.rect, s)


def is_subterritory(E: Rect, s: Shape) -> bool:
    box = s.box
    if not (box.xlo < E.xlo and E.xhi < box.xhi and box.ylo < E.ylo and E.yhi < box.yhi):
        return False
    # vertical segments qualify; crossing needs some height
    if E.height == 0:
        return False
    if not territory_contains(s, E):
        return False
    return crosses_vertically(s, right_extension(E, box))


def find_subterritory(s: Shape) -> SubterritoryCert:
    """A certified subterritory of a strong shape.

    Every open territory cell has a covered face to its right on the same row,
    and that face spans the cell's full height. The middle third of the first
    such cell is therefore a subterritory whose right extension is crossed.
    """
    if not is_strong(s):
        raise ShapeError("not-strong", f"shape {s.id} has an empty territory")
    arr = Arrangement.of(s.region)
    ter = arr.territory(s.region)
    for i in range(1, arr.shape[0], 2):
        for j in range(1, arr.shape[1], 2):
            if not ter[i, j]:
                continue
            cell = arr.face(i, j)
            dx, dy = cell.width / 3, cell.height / 3
            E = Rect(cell.xlo + dx, cell.xhi - dx, cell.ylo + dy, cell.yhi - dy)
            witness = crossing_witness(s, right_extension(E, s.box))
            if witness is not None and is_subterritory(E, s):
                logger.debug(f"Subterritory of {s.id}: {E.as_strings()}")
                return SubterritoryCert(E, witness)
    raise ShapeError("internal-error", f"no subterritory found for strong shape {s.id}")
