"""Exact rational points, rectangles and per-axis affine transformations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from errors import GeometryError

Rat = Fraction
RatLike = Union[Fraction, int, str]


def to_rat(value: RatLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise GeometryError("not-exact", f"refusing inexact coordinate {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise GeometryError("bad-rational", f"{value!r}: {e}")


def parse_rat(text: str) -> Fraction:
    if not isinstance(text, str):
        raise GeometryError("bad-rational", f"expected a 'p/q' string, got {text!r}")
    if "." in text or "e" in text.lower():
        raise GeometryError("bad-rational", f"{text!r} is not of the form p/q")
    return to_rat(text.strip())


def format_rat(value: Fraction) -> str:
    # Fraction.__str__ already renders "p" when q == 1
    return str(value)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rat(self.x))
        object.__setattr__(self, "y", to_rat(self.y))


@dataclass(frozen=True)
class Rect:
    """Closed axis-parallel rectangle [xlo, xhi] x [ylo, yhi], possibly degenerate.

    The empty rectangle is represented by None wherever an operation can produce it.
    """

    xlo: Fraction
    xhi: Fraction
    ylo: Fraction
    yhi: Fraction

    def __post_init__(self):
        for name in ("xlo", "xhi", "ylo", "yhi"):
            object.__setattr__(self, name, to_rat(getattr(self, name)))
        if self.xlo > self.xhi or self.ylo > self.yhi:
            raise GeometryError(
                "bad-rect",
                f"[{self.xlo}, {self.xhi}] x [{self.ylo}, {self.yhi}] is inverted",
            )

    @property
    def key(self) -> tuple:
        return (self.xlo, self.ylo, self.xhi, self.yhi)

    @property
    def width(self) -> Fraction:
        return self.xhi - self.xlo

    @property
    def height(self) -> Fraction:
        return self.yhi - self.ylo

    def contains_point(self, p: Point) -> bool:
        return self.xlo <= p.x <= self.xhi and self.ylo <= p.y <= self.yhi

    def contains(self, other: Rect) -> bool:
        return (
            self.xlo <= other.xlo
            and other.xhi <= self.xhi
            and self.ylo <= other.ylo
            and other.yhi <= self.yhi
        )

    def intersects(self, other: Rect) -> bool:
        return (
            self.xlo <= other.xhi
            and other.xlo <= self.xhi
            and self.ylo <= other.yhi
            and other.ylo <= self.yhi
        )

    def intersection(self, other: Rect) -> Optional[Rect]:
        if not self.intersects(other):
            return None
        return Rect(
            max(self.xlo, other.xlo),
            min(self.xhi, other.xhi),
            max(self.ylo, other.ylo),
            min(self.yhi, other.yhi),
        )

    def hull(self, other: Rect) -> Rect:
        return Rect(
            min(self.xlo, other.xlo),
            max(self.xhi, other.xhi),
            min(self.ylo, other.ylo),
            max(self.yhi, other.yhi),
        )

    def as_strings(self) -> list[str]:
        return [format_rat(v) for v in (self.xlo, self.xhi, self.ylo, self.yhi)]

    @classmethod
    def from_strings(cls, values: list) -> Rect:
        if len(values) != 4:
            raise GeometryError("bad-rect", f"expected 4 coordinates, got {len(values)}")
        return cls(*(parse_rat(v) for v in values))


@dataclass(frozen=True)
class Transform:
    """(x, y) -> (a*x + c, b*y + d) with a, b nonzero."""

    a: Fraction
    b: Fraction
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, to_rat(getattr(self, name)))
        if self.a == 0 or self.b == 0:
            raise GeometryError("bad-transform", "a and b must be nonzero")

    @classmethod
    def identity(cls) -> Transform:
        return cls(1, 1, 0, 0)

    @classmethod
    def reflection(cls) -> Transform:
        """Horizontal reflection (x, y) -> (-x, y)."""
        return cls(-1, 1, 0, 0)

    @classmethod
    def matching(cls, source: Rect, target: Rect) -> Transform:
        """The positive transform sending `source` onto `target` corner to corner."""
        if source.width == 0 or source.height == 0:
            raise GeometryError("degenerate-source", "cannot match a degenerate rect")
        a = target.width / source.width
        b = target.height / source.height
        return cls(a, b, target.xlo - a * source.xlo, target.ylo - b * source.ylo)

    def is_positive(self) -> bool:
        return self.a > 0 and self.b > 0

    def compose(self, inner: Transform) -> Transform:
        """self ∘ inner: apply `inner` first."""
        return Transform(
            self.a * inner.a,
            self.b * inner.b,
            self.a * inner.c + self.c,
            self.b * inner.d + self.d,
        )

    def invert(self) -> Transform:
        return Transform(1 / self.a, 1 / self.b, -self.c / self.a, -self.d / self.b)

    def apply_x(self, x: Fraction) -> Fraction:
        return self.a * x + self.c

    def apply_y(self, y: Fraction) -> Fraction:
        return self.b * y + self.d

    def apply_point(self, p: Point) -> Point:
        return Point(self.apply_x(p.x), self.apply_y(p.y))

    def apply_rect(self, r: Rect) -> Rect:
        x0, x1 = self.apply_x(r.xlo), self.apply_x(r.xhi)
        y0, y1 = self.apply_y(r.ylo), self.apply_y(r.yhi)
        return Rect(min(x0, x1), max(x0, x1), min(y0, y1), max(y0, y1))

    def coefficients(self) -> list[str]:
        return [format_rat(v) for v in (self.a, self.b, self.c, self.d)]


def compose(t1: Transform, t2: Transform) -> Transform:
    """Apply t2, then t1."""
    return t1.compose(t2)


def invert(t: Transform) -> Transform:
    return t.invert()


def is_positive(t: Transform) -> bool:
    return t.is_positive()
