"""The constraint suite C1-C6 and the oriented intersection graph.

C1  intersecting A, B: A ↷ B or B ↷ A
C2  disjoint A, B with A ∩ Ter(B) ≠ ∅: A ≺ B
C3  no C ⊆ Ter(A) ∩ Ter(B) for intersecting A, B
C4  never A ≺ B, A ↷ C and B ↷ C
C5  no three pairwise intersecting shapes
C6  every shape is a positive transformed copy of the base (or of its reflection)
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional

import numpy as np

from burling.axioms import OGraph
from config import settings
from errors import ConstraintError
from geometry.exact import Transform
from models import ConstraintReport, ConstraintResult
from relations.relations import Family, RelationTable, arrow, prec
from shapes.pouna import Shape, inside_territories, territory_meets

logger = logging.getLogger(__name__)

ALL_CONSTRAINTS = ("C1", "C2", "C3", "C4", "C5", "C6")


class _Collector:
    def __init__(self, cap: int):
        self.cap = cap
        self.result = ConstraintResult()

    def check(self):
        self.result.checked += 1

    def fail(self, *ids: str):
        if len(self.result.violations) < self.cap:
            self.result.violations.append(list(ids))
        else:
            self.result.truncated = True


def positive_copy_transform(A: Shape, S: Shape) -> Optional[Transform]:
    """The positive transform T with T(S) = A, if there is one.

    Bounding boxes determine the only candidate.
    """
    if S.width == 0 or S.height == 0 or A.width == 0 or A.height == 0:
        return None
    a = A.width / S.width
    b = A.height / S.height
    t = Transform(a, b, A.l - a * S.l, A.b - b * S.b)
    return t if S.region.transformed(t) == A.region else None


def _requested(f: Family, constraints: Optional[Iterable[str]]) -> list[str]:
    if constraints is None:
        return [c for c in ALL_CONSTRAINTS if c != "C6" or f.base is not None]
    names = [c.upper() for c in constraints]
    unknown = [c for c in names if c not in ALL_CONSTRAINTS]
    if unknown:
        raise ConstraintError("unknown-constraint", f"{unknown}")
    if "C6" in names and f.base is None:
        raise ConstraintError("no-base", "C6 needs the family's base shape")
    return [c for c in ALL_CONSTRAINTS if c in names]


def _check_exact(f: Family, names: list[str], out: dict[str, _Collector], table: RelationTable):
    shapes, ids = f.shapes, f.ids
    if "C1" in names:
        for i, j in sorted(table.meets):
            out["C1"].check()
            if not (table.is_arrow(i, j) or table.is_arrow(j, i)):
                out["C1"].fail(ids[i], ids[j])
    if "C2" in names:
        for i, j in zip(*np.nonzero(table.boxes_meet)):
            i, j = int(i), int(j)
            if table.meet(i, j):
                continue
            out["C2"].check()
            if territory_meets(shapes[j], shapes[i]) and not table.is_prec(i, j):
                out["C2"].fail(ids[i], ids[j])
    if "C3" in names:
        for i, j in sorted(table.meets):
            inside_both = table.box_inside[:, i] & table.box_inside[:, j]
            for k in np.flatnonzero(inside_both):
                k = int(k)
                out["C3"].check()
                if inside_territories(shapes[k], shapes[i], shapes[j]):
                    out["C3"].fail(ids[i], ids[j], ids[k])
    if "C4" in names:
        sources: dict[int, list[int]] = {}
        for i, k in sorted(table.arrows):
            sources.setdefault(k, []).append(i)
        for k in sorted(sources):
            for i in sources[k]:
                for j in sources[k]:
                    if i == j:
                        continue
                    out["C4"].check()
                    if table.is_prec(i, j):
                        out["C4"].fail(ids[i], ids[j], ids[k])
    if "C5" in names:
        for i, j in sorted(table.meets):
            for k in sorted(table.neighbours[i] & table.neighbours[j]):
                if k > j:
                    out["C5"].check()
                    out["C5"].fail(ids[i], ids[j], ids[k])


def _check_sampled(f: Family, names: list[str], out: dict[str, _Collector], sample: int, seed: int):
    shapes, n = f.shapes, len(f.shapes)
    rng = np.random.default_rng(seed)
    if n >= 2 and {"C1", "C2"} & set(names):
        for _ in range(sample):
            i, j = (int(v) for v in rng.choice(n, size=2, replace=False))
            A, B = shapes[i], shapes[j]
            meet = A.meets(B)
            if "C1" in names:
                out["C1"].check()
                if meet and not (arrow(A, B) or arrow(B, A)):
                    out["C1"].fail(A.id, B.id)
            if "C2" in names and not meet:
                for X, Y in ((A, B), (B, A)):
                    out["C2"].check()
                    if territory_meets(Y, X) and not prec(X, Y):
                        out["C2"].fail(X.id, Y.id)
    if n >= 3 and {"C3", "C4", "C5"} & set(names):
        for _ in range(sample):
            i, j, k = (int(v) for v in rng.choice(n, size=3, replace=False))
            A, B, C = shapes[i], shapes[j], shapes[k]
            ab = A.meets(B)
            if "C3" in names:
                out["C3"].check()
                if ab and inside_territories(C, A, B):
                    out["C3"].fail(A.id, B.id, C.id)
            if "C4" in names:
                out["C4"].check()
                if prec(A, B) and arrow(A, C) and arrow(B, C):
                    out["C4"].fail(A.id, B.id, C.id)
            if "C5" in names:
                out["C5"].check()
                if ab and A.meets(C) and B.meets(C):
                    out["C5"].fail(A.id, B.id, C.id)


def _check_c6(f: Family, out: _Collector):
    target = f.base_target()
    for s in f:
        out.check()
        if positive_copy_transform(s, target) is None:
            out.fail(s.id)


def check_constraints(
    f: Family,
    constraints: Optional[Iterable[str]] = None,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
    table: Optional[RelationTable] = None,
) -> ConstraintReport:
    """Evaluate C1-C6 on a family.

    With `sample` set, C1/C2 are checked on that many random pairs and C3-C5 on
    that many random triples; C6 is always checked on every shape.
    """
    names = _requested(f, constraints)
    cap = settings.violation_cap if cap is None else cap
    out = {name: _Collector(cap) for name in names}
    if sample is None:
        table = table or RelationTable(f)
        _check_exact(f, names, out, table)
    else:
        seed = settings.sample_seed if seed is None else seed
        _check_sampled(f, names, out, sample, seed)
    if "C6" in names:
        _check_c6(f, out["C6"])

    report = ConstraintReport(
        constraints={name: c.result for name, c in out.items()},
        sampled=sample is not None,
    )
    if report.passed:
        logger.info(f"Constraints {','.join(names)} hold on {len(f)} shapes")
    else:
        logger.info(f"Constraints failing on {len(f)} shapes: {report.failing()}")
    return report


def oriented_intersection_graph(f: Family, table: Optional[RelationTable] = None) -> OGraph:
    """Vertices are shape ids, arcs A -> B whenever A ↷ B."""
    table = table or RelationTable(f)
    ids = f.ids
    for i, j in sorted(table.meets):
        if not (table.is_arrow(i, j) or table.is_arrow(j, i)):
            raise ConstraintError("not-c1", f"{ids[i]} and {ids[j]} intersect without an arc")
    return OGraph(tuple(ids), table.id_pairs(table.arrows))
