"""Families of strong Pouna shapes and the relations ≺ and ↷ between them."""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, Optional

import networkx as nx
import numpy as np

from errors import ConstraintError
from geometry.exact import Rect, Transform
from shapes.pouna import (
    Provenance,
    Shape,
    inside_territories,
    is_pouna,
    is_strong,
    left_edge_set,
    reflect,
    territory_contains,
)

logger = logging.getLogger(__name__)


class Family:
    """Non-empty ordered family of strong Pouna shapes with unique ids.

    `base` is the shape S every member is a positive transformed copy of,
    together with the flag telling whether S had to be reflected first.
    """

    def __init__(
        self,
        shapes: Iterable[Shape],
        base: Optional[tuple[Shape, bool]] = None,
        validate: bool = True,
    ):
        self.shapes: list[Shape] = list(shapes)
        self.base = base
        if not self.shapes:
            raise ConstraintError("empty-family", "a family needs at least one shape")
        self.index = {s.id: i for i, s in enumerate(self.shapes)}
        if len(self.index) != len(self.shapes):
            raise ConstraintError("duplicate-id", "shape ids must be unique")
        if validate:
            for s in self.shapes:
                if not is_pouna(s.region):
                    raise ConstraintError("not-pouna", f"shape {s.id} is not a Pouna set")
                if not is_strong(s):
                    raise ConstraintError("not-strong", f"shape {s.id} has an empty territory")

    def __iter__(self) -> Iterator[Shape]:
        return iter(self.shapes)

    def __len__(self) -> int:
        return len(self.shapes)

    def __getitem__(self, id: str) -> Shape:
        return self.shapes[self.index[id]]

    @property
    def ids(self) -> list[str]:
        return [s.id for s in self.shapes]

    def box(self) -> Rect:
        return Rect(
            min(s.l for s in self.shapes),
            max(s.r for s in self.shapes),
            min(s.b for s in self.shapes),
            max(s.t for s in self.shapes),
        )

    def base_target(self) -> Shape:
        """The shape every member must be a positive copy of."""
        if self.base is None:
            raise ConstraintError("no-base", "family has no recorded base shape")
        shape, reflected = self.base
        return reflect(shape) if reflected else shape


def prec(A: Shape, B: Shape) -> bool:
    """box(A) ⊆ Ter(B)."""
    return territory_contains(B, A.box)


def arrow(A: Shape, B: Shape) -> bool:
    if not (B.l <= A.l < B.r < A.r and B.b < A.b < A.t < B.t):
        return False
    if not A.meets(B):
        return False
    return inside_territories(left_edge_set(A), B)


def comparable(A: Shape, B: Shape) -> bool:
    return arrow(A, B) or arrow(B, A) or prec(A, B) or prec(B, A)


def _bounds(shapes: list[Shape]) -> tuple[np.ndarray, ...]:
    return tuple(
        np.array([getattr(s, side) for s in shapes], dtype=object)
        for side in ("l", "r", "b", "t")
    )


class RelationTable:
    """Intersections, ≺ and ↷ of a whole family, computed once.

    Bounding boxes prune the candidate pairs: ≺ needs box(A) ⊆ box(B) and ↷
    needs A ∩ B ≠ ∅. Every ≺ pair is checked against r(A) < r(B), h(A) ≤ h(B).
    """

    def __init__(self, family: Family):
        self.family = family
        shapes = family.shapes
        n = len(shapes)
        L, R, B, T = _bounds(shapes)
        boxes_meet = (
            (L[:, None] <= R[None, :])
            & (L[None, :] <= R[:, None])
            & (B[:, None] <= T[None, :])
            & (B[None, :] <= T[:, None])
        ).astype(bool)
        # inside[i, j]: box(i) ⊆ box(j)
        inside = (
            (L[None, :] <= L[:, None])
            & (R[:, None] <= R[None, :])
            & (B[None, :] <= B[:, None])
            & (T[:, None] <= T[None, :])
        ).astype(bool)
        np.fill_diagonal(boxes_meet, False)
        np.fill_diagonal(inside, False)
        self.boxes_meet = boxes_meet
        self.box_inside = inside

        self.meets: set[tuple[int, int]] = set()
        self.arrows: set[tuple[int, int]] = set()
        self.precs: set[tuple[int, int]] = set()
        for i, j in zip(*np.nonzero(np.triu(boxes_meet))):
            i, j = int(i), int(j)
            if shapes[i].meets(shapes[j]):
                self.meets.add((i, j))
                if arrow(shapes[i], shapes[j]):
                    self.arrows.add((i, j))
                if arrow(shapes[j], shapes[i]):
                    self.arrows.add((j, i))
        for i, j in zip(*np.nonzero(inside)):
            i, j = int(i), int(j)
            if (min(i, j), max(i, j)) in self.meets:
                continue
            if prec(shapes[i], shapes[j]):
                self._check_prec_pair(shapes[i], shapes[j])
                self.precs.add((i, j))
        self.neighbours: list[set[int]] = [set() for _ in range(n)]
        for i, j in self.meets:
            self.neighbours[i].add(j)
            self.neighbours[j].add(i)
        logger.debug(
            f"Relations of {n} shapes: {len(self.meets)} intersecting, "
            f"{len(self.arrows)} arrow, {len(self.precs)} prec"
        )

    @staticmethod
    def _check_prec_pair(a: Shape, b: Shape):
        if not (a.r < b.r and a.height <= b.height):
            raise ConstraintError(
                "internal-error",
                f"{a.id} ≺ {b.id} without r({a.id}) < r({b.id}) and h({a.id}) ≤ h({b.id})",
            )

    def meet(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.meets

    def is_prec(self, i: int, j: int) -> bool:
        return (i, j) in self.precs

    def is_arrow(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows

    def comparable(self, i: int, j: int) -> bool:
        return (
            self.is_arrow(i, j) or self.is_arrow(j, i) or self.is_prec(i, j) or self.is_prec(j, i)
        )

    def id_pairs(self, pairs: set[tuple[int, int]]) -> frozenset[tuple[str, str]]:
        ids = self.family.ids
        return frozenset((ids[i], ids[j]) for i, j in pairs)


def intersection_graph(f: Family, table: Optional[RelationTable] = None) -> nx.Graph:
    table = table or RelationTable(f)
    ids = f.ids
    g = nx.Graph()
    g.add_nodes_from(ids)
    g.add_edges_from((ids[i], ids[j]) for i, j in sorted(table.meets))
    return g


def transform_family(f: Family, t: Transform) -> Family:
    """Positive transformed copy of a family; the base is unchanged."""
    if not t.is_positive():
        raise ConstraintError("not-positive", "family transforms must be positive")
    return Family(
        (s.transformed(t, provenance=_moved(s.provenance, t)) for s in f),
        base=f.base,
        validate=False,
    )


def _moved(p: Optional[Provenance], t: Transform) -> Optional[Provenance]:
    if p is None:
        return None
    return Provenance(p.level, p.prob, t.compose(p.transform))
