"""Finite unions of closed rects with a canonical form.

The canonical form of a region is the sorted list of all maximal rects it
contains. Two regions are equal as point sets iff their canonical forms are
equal, and a positive or negative axis-wise affine map sends the canonical form
of R onto the canonical form of its image.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from errors import GeometryError
from geometry.arrangement import Arrangement
from geometry.exact import Point, Rect, Transform

logger = logging.getLogger(__name__)


def _maximal_rects(rects: list[Rect]) -> list[Rect]:
    arr = Arrangement.of(rects)
    grid = arr.cover(rects)
    nx_, ny_ = len(arr.xs), len(arr.ys)
    found = []
    for c in range(ny_):
        for d in range(c, ny_):
            band = grid[:, 2 * c : 2 * d + 1].all(axis=1)
            if not band.any():
                # a taller band over the same rows cannot be covered either
                break
            padded = np.concatenate(([False], band, [False])).astype(np.int8)
            edges = np.diff(padded)
            starts = np.flatnonzero(edges == 1)
            ends = np.flatnonzero(edges == -1) - 1
            for i0, i1 in zip(starts, ends):
                cols = slice(int(i0), int(i1) + 1)
                if c > 0 and grid[cols, 2 * c - 2 : 2 * d + 1].all():
                    continue
                if d < ny_ - 1 and grid[cols, 2 * c : 2 * d + 3].all():
                    continue
                found.append(
                    Rect(arr.xs[int(i0) // 2], arr.xs[int(i1) // 2], arr.ys[c], arr.ys[d])
                )
    return found


def canonicalize(rects: Iterable[Rect]) -> tuple[Rect, ...]:
    rects = [r for r in rects if r is not None]
    if len(rects) <= 1:
        return tuple(rects)
    return tuple(sorted(_maximal_rects(rects), key=lambda r: r.key))


class Region:
    """A finite union of closed, possibly degenerate rects, kept canonical."""

    __slots__ = ("rects",)

    def __init__(self, rects: Iterable[Rect] = ()):
        self.rects: tuple[Rect, ...] = canonicalize(rects)

    @classmethod
    def _trusted(cls, rects: Iterable[Rect]) -> Region:
        region = cls.__new__(cls)
        region.rects = tuple(sorted(rects, key=lambda r: r.key))
        return region

    def __iter__(self) -> Iterator[Rect]:
        return iter(self.rects)

    def __len__(self) -> int:
        return len(self.rects)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return self.rects == other.rects

    def __hash__(self) -> int:
        return hash(self.rects)

    def __repr__(self) -> str:
        parts = ", ".join(
            f"[{r.xlo},{r.xhi}]x[{r.ylo},{r.yhi}]" for r in self.rects
        )
        return f"Region({parts})"

    def is_empty(self) -> bool:
        return not self.rects

    def bounds(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """(l, r, b, t) of the region."""
        if not self.rects:
            raise GeometryError("empty-region", "bounds of an empty region")
        return (
            min(r.xlo for r in self.rects),
            max(r.xhi for r in self.rects),
            min(r.ylo for r in self.rects),
            max(r.yhi for r in self.rects),
        )

    def bbox(self) -> Rect:
        return Rect(*self.bounds())

    def transformed(self, t: Transform) -> Region:
        return Region._trusted(t.apply_rect(r) for r in self.rects)

    def contains_point(self, p: Point) -> bool:
        return any(r.contains_point(p) for r in self.rects)

    def contains_rect(self, q: Rect) -> bool:
        if not self.rects:
            return False
        arr = Arrangement.of(self.rects, q)
        return bool(arr.cover(self.rects)[arr.span(q)].all())

    def intersects_rect(self, q: Rect) -> bool:
        return any(r.intersects(q) for r in self.rects)

    def intersects(self, other: Region) -> bool:
        return any(a.intersects(b) for a in self.rects for b in other.rects)

    def intersection(self, other) -> Region:
        others = other.rects if isinstance(other, Region) else (other,)
        return Region(a.intersection(b) for a in self.rects for b in others)

    def union(self, other: Region) -> Region:
        return Region(self.rects + other.rects)

    def is_connected(self) -> bool:
        if not self.rects:
            return False
        if len(self.rects) == 1:
            return True
        arr = Arrangement.of(self.rects)
        _, count = Arrangement.components(arr.cover(self.rects))
        return count == 1


def bounds(r: Region) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    return r.bounds()


def apply(t: Transform, r: Region) -> Region:
    return r.transformed(t)


def intersect(r1: Region, r2: Region) -> Region:
    return r1.intersection(r2)


def union(r1: Region, r2: Region) -> Region:
    return r1.union(r2)


def equals(r1: Region, r2: Region) -> bool:
    return r1 == r2


def membership(p: Point, r: Region) -> bool:
    return r.contains_point(p)


def contains_rect(r: Region, q: Rect) -> bool:
    return r.contains_rect(q)


def is_connected(r: Region) -> bool:
    return r.is_connected()
