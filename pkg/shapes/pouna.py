"""Rectilinear Pouna sets and their territories."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Optional

import numpy as np

from errors import ShapeError
from geometry.arrangement import Arrangement
from geometry.exact import Point, Rect, Transform
from geometry.region import Region

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Provenance:
    # level 1 is the base shape; prob is the id of the prob the copy was inserted for
    level: int
    prob: Optional[str] = None
    transform: Transform = field(default_factory=Transform.identity)


@dataclass(frozen=True)
class Shape:
    """A rectilinear Pouna candidate: a connected region that is not a rect.

    The constructor trusts its region; use `Shape.of` to validate.
    """

    id: str
    region: Region
    provenance: Optional[Provenance] = field(default=None, compare=False)

    @classmethod
    def of(cls, region: Region, id: str = "S", provenance: Optional[Provenance] = None) -> Shape:
        if not is_pouna(region):
            raise ShapeError("not-pouna", f"shape {id} is not a rectilinear Pouna set")
        return cls(str(id), region, provenance)

    @property
    def rects(self) -> tuple[Rect, ...]:
        return self.region.rects

    @cached_property
    def box(self) -> Rect:
        return self.region.bbox()

    @property
    def l(self) -> Fraction:
        return self.box.xlo

    @property
    def r(self) -> Fraction:
        return self.box.xhi

    @property
    def b(self) -> Fraction:
        return self.box.ylo

    @property
    def t(self) -> Fraction:
        return self.box.yhi

    @property
    def width(self) -> Fraction:
        return self.box.width

    @property
    def height(self) -> Fraction:
        return self.box.height

    def transformed(self, t: Transform, id: Optional[str] = None, provenance: Optional[Provenance] = None) -> Shape:
        return Shape(id if id is not None else self.id, self.region.transformed(t), provenance)

    def meets(self, other) -> bool:
        if isinstance(other, Rect):
            return self.region.intersects_rect(other)
        return self.region.intersects(other.region if isinstance(other, Shape) else other)


def is_pouna(r: Region) -> bool:
    """Non-empty, connected and not a single (possibly degenerate) rect."""
    # the canonical form of a single rect is that rect alone
    return len(r) > 1 and r.is_connected()


def ter_member(p: Point, s: Shape) -> bool:
    if not s.box.contains_point(p) or s.region.contains_point(p):
        return False
    row_right = [q.xhi for q in s.rects if q.ylo <= p.y <= q.yhi]
    return bool(row_right) and max(row_right) > p.x


def territory_grid(s: Shape, *others) -> tuple[Arrangement, np.ndarray]:
    """Territory of `s` as a face grid over the arrangement of `s` and `others`."""
    arr = Arrangement.of(s.region, *others)
    return arr, arr.territory(s.region)


def territory_contains(s: Shape, q: Rect) -> bool:
    """q ⊆ Ter(s)."""
    if not s.box.contains(q):
        return False
    arr, ter = territory_grid(s, q)
    return bool(ter[arr.span(q)].all())


def territory_meets(s: Shape, other) -> bool:
    """other ∩ Ter(s) ≠ ∅ for a rect, region or shape."""
    item = other.region if isinstance(other, Shape) else other
    arr, ter = territory_grid(s, item)
    return bool((ter & arr.cover(item)).any())


def territories_meet(a: Shape, b: Shape) -> bool:
    arr = Arrangement.of(a.region, b.region)
    return bool((arr.territory(a.region) & arr.territory(b.region)).any())


def inside_territories(item, *owners: Shape) -> bool:
    """item ⊆ Ter(A) for every A in owners; item is a shape, region or rect."""
    item = item.region if isinstance(item, Shape) else item
    arr = Arrangement.of(item, *(o.region for o in owners))
    cov = arr.cover(item)
    for o in owners:
        if (cov & ~arr.territory(o.region)).any():
            return False
    return True


def is_strong(s: Shape) -> bool:
    arr = Arrangement.of(s.region)
    return bool(arr.territory(s.region).any())


def reflect(s: Shape) -> Shape:
    """Horizontal reflection (x, y) -> (-x, y)."""
    return s.transformed(Transform.reflection())


def strongify(s: Shape) -> tuple[Shape, bool]:
    """Return s if strong, else its horizontal reflection, which then is."""
    if not is_pouna(s.region):
        raise ShapeError("not-pouna", f"shape {s.id} is not a rectilinear Pouna set")
    if is_strong(s):
        return s, False
    mirrored = reflect(s)
    if not is_strong(mirrored):
        raise ShapeError(
            "internal-error", f"neither {s.id} nor its reflection has a territory"
        )
    logger.debug(f"Shape {s.id} is not strong, using its reflection")
    return mirrored, True


def left_edge_set(s: Shape) -> Region:
    return s.region.intersection(Rect(s.l, s.l, s.b, s.t))


def interior_gap_witness(s: Shape) -> Point:
    """A point of the open box of s that is not in s."""
    if not is_pouna(s.region):
        raise ShapeError("not-pouna", f"shape {s.id} is not a rectilinear Pouna set")
    arr = Arrangement.of(s.region)
    cov = arr.cover(s.region)
    # uncovered interior edges and vertices always border an uncovered open cell
    for i in range(1, arr.shape[0], 2):
        for j in range(1, arr.shape[1], 2):
            if not cov[i, j]:
                return arr.sample(i, j)
    raise ShapeError("internal-error", f"open box of {s.id} is covered by the shape")


@dataclass(frozen=True)
class TerritoryCell:
    rect: Rect
    open_left: bool
    open_right: bool
    open_bottom: bool
    open_top: bool


def materialize_territory(s: Shape) -> list[TerritoryCell]:
    """Open territory cells of s, with a flag per side that is not part of Ter(s)."""
    arr, ter = territory_grid(s)
    cells = []
    for i in range(1, arr.shape[0], 2):
        for j in range(1, arr.shape[1], 2):
            if ter[i, j]:
                cells.append(
                    TerritoryCell(
                        rect=arr.face(i, j),
                        open_left=not ter[i - 1, j],
                        open_right=not ter[i + 1, j],
                        open_bottom=not ter[i, j - 1],
                        open_top=not ter[i, j + 1],
                    )
                )
    return cells
