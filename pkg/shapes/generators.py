"""Preset shapes and a seeded generator of random rectilinear Pouna shapes."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import numpy as np

from errors import ShapeError
from geometry.exact import Rect, Transform
from geometry.region import Region
from shapes.pouna import Shape, is_pouna


def frame_region(box: Rect) -> Region:
    """The boundary of a box as four degenerate rects."""
    return Region(
        [
            Rect(box.xlo, box.xhi, box.ylo, box.ylo),
            Rect(box.xlo, box.xhi, box.yhi, box.yhi),
            Rect(box.xlo, box.xlo, box.ylo, box.yhi),
            Rect(box.xhi, box.xhi, box.ylo, box.yhi),
        ]
    )


def frame(box: Optional[Rect] = None, id: str = "S") -> Shape:
    return Shape.of(frame_region(box or Rect(0, 3, 0, 3)), id)


def gamma(id: str = "S") -> Shape:
    """The L shape [0,1]x[0,3] ∪ [0,3]x[0,1]; only its reflection is strong."""
    return Shape.of(Region([Rect(0, 1, 0, 3), Rect(0, 3, 0, 1)]), id)


PRESETS = {
    "frame": frame,
    "gamma": gamma,
}


def preset(name: str, id: str = "S") -> Shape:
    try:
        return PRESETS[name](id=id)
    except KeyError:
        raise ShapeError("unknown-shape", f"no preset named {name!r}")


def random_rect(rng: np.random.Generator, grid: int = 8, degenerate: float = 0.25) -> Rect:
    xs = np.sort(rng.integers(0, grid + 1, size=2))
    ys = np.sort(rng.integers(0, grid + 1, size=2))
    # mostly solid rects, with segments mixed in
    if rng.random() >= degenerate:
        if xs[0] == xs[1]:
            xs[1] = xs[0] + 1
        if ys[0] == ys[1]:
            ys[1] = ys[0] + 1
    return Rect(int(xs[0]), int(xs[1]), int(ys[0]), int(ys[1]))


def random_pouna(
    rng: np.random.Generator,
    n_rects: int = 3,
    grid: int = 8,
    id: str = "S",
    max_tries: int = 1000,
) -> Shape:
    """A random connected union of `n_rects` grid rects that is not a rect."""
    for _ in range(max_tries):
        region = Region(random_rect(rng, grid) for _ in range(n_rects))
        if is_pouna(region):
            return Shape(id, region)
    raise ShapeError("internal-error", f"no Pouna shape after {max_tries} tries")


def random_positive_transform(rng: np.random.Generator, scale: int = 5) -> Transform:
    a, b = (
        Fraction(int(rng.integers(1, scale + 1)), int(rng.integers(1, scale + 1)))
        for _ in range(2)
    )
    c, d = (
        Fraction(int(rng.integers(-scale, scale + 1)), int(rng.integers(1, 4)))
        for _ in range(2)
    )
    return Transform(a, b, c, d)
