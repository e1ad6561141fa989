"""Coordinate arrangements and face sampling.

Every rectilinear predicate in this package is decided on the arrangement
spanned by the x- and y-coordinates of its inputs. Faces are indexed on a
doubled grid: an even index 2k stands for the coordinate value k, an odd index
2k+1 for the open interval between values k and k+1. A face is therefore a
vertex (even, even), an open edge (one odd index) or an open cell (odd, odd),
and membership in a union of closed rects is constant on every face.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

import numpy as np
from scipy import ndimage

from errors import GeometryError
from geometry.exact import Point, Rect


def _rects_of(item) -> Iterable[Rect]:
    if isinstance(item, Rect):
        return (item,)
    rects = getattr(item, "rects", None)
    if rects is None:
        return tuple(item)
    return rects


class Arrangement:
    def __init__(self, xs: Iterable[Fraction], ys: Iterable[Fraction]):
        self.xs = sorted(set(xs))
        self.ys = sorted(set(ys))
        if not self.xs or not self.ys:
            raise GeometryError("empty-arrangement", "no coordinates to arrange")
        self._xi = {x: i for i, x in enumerate(self.xs)}
        self._yi = {y: i for i, y in enumerate(self.ys)}
        self.shape = (2 * len(self.xs) - 1, 2 * len(self.ys) - 1)

    @classmethod
    def of(cls, *items: Union[Rect, Iterable[Rect]]) -> Arrangement:
        """Arrangement of every coordinate of the given rects or regions."""
        xs, ys = [], []
        for item in items:
            for r in _rects_of(item):
                xs += (r.xlo, r.xhi)
                ys += (r.ylo, r.yhi)
        return cls(xs, ys)

    def x_index(self, x: Fraction) -> int:
        try:
            return 2 * self._xi[x]
        except KeyError:
            raise GeometryError("not-in-arrangement", f"x = {x}")

    def y_index(self, y: Fraction) -> int:
        try:
            return 2 * self._yi[y]
        except KeyError:
            raise GeometryError("not-in-arrangement", f"y = {y}")

    def span(self, rect: Rect) -> tuple[slice, slice]:
        """Index window of all faces contained in the closed rect."""
        return (
            slice(self.x_index(rect.xlo), self.x_index(rect.xhi) + 1),
            slice(self.y_index(rect.ylo), self.y_index(rect.yhi) + 1),
        )

    def cover(self, item) -> np.ndarray:
        """Boolean face grid of a union of closed rects."""
        grid = np.zeros(self.shape, dtype=bool)
        for r in _rects_of(item):
            grid[self.span(r)] = True
        return grid

    def territory(self, item) -> np.ndarray:
        """Faces of box(S) \\ S having a point of S strictly to their right on the same row."""
        rects = tuple(_rects_of(item))
        cov = self.cover(rects)
        right = np.zeros_like(cov)
        if cov.shape[0] > 1:
            right[:-1] = np.logical_or.accumulate(cov[::-1], axis=0)[::-1][1:]
        inbox = np.zeros_like(cov)
        if rects:
            box = rects[0]
            for r in rects[1:]:
                box = box.hull(r)
            inbox[self.span(box)] = True
        return inbox & ~cov & right

    @staticmethod
    def _coordinate(values: list[Fraction], k: int) -> Fraction:
        if k % 2 == 0:
            return values[k // 2]
        return (values[k // 2] + values[k // 2 + 1]) / 2

    def sample(self, i: int, j: int) -> Point:
        """Representative point of face (i, j)."""
        return Point(self._coordinate(self.xs, i), self._coordinate(self.ys, j))

    def face(self, i: int, j: int) -> Rect:
        """Closure of face (i, j)."""
        return Rect(
            self.xs[i // 2],
            self.xs[(i + 1) // 2],
            self.ys[j // 2],
            self.ys[(j + 1) // 2],
        )

    def samples(self) -> Iterator[tuple[int, int, Point]]:
        for i in range(self.shape[0]):
            for j in range(self.shape[1]):
                yield i, j, self.sample(i, j)

    @staticmethod
    def components(mask: np.ndarray) -> tuple[np.ndarray, int]:
        """Connected components of a closed face set.

        For closed sets, two faces are adjacent iff they differ by one in a
        single index, which is scipy's default cross-shaped structure.
        """
        labels, count = ndimage.label(mask)
        return labels, int(count)
