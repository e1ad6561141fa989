"""Probs, their neighbours and roots, and prob stability."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from errors import ConstructionError
from geometry.exact import Rect
from relations.relations import Family
from shapes.crossing import crosses_vertically
from shapes.pouna import inside_territories

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Prob:
    """A closed rect inside box(F) whose right side lies on r(box(F))."""

    id: str
    rect: Rect


def prob_defined_by(E: Rect, bbox: Rect, id: str = "p") -> Prob:
    """[l(E), r(bbox)] x [b(E), t(E)]."""
    if not bbox.contains(E):
        raise ConstructionError("not-nested", f"{E.as_strings()} is not inside {bbox.as_strings()}")
    return Prob(id, Rect(E.xlo, bbox.xhi, E.ylo, E.yhi))


def neighbors(p: Prob, f: Family) -> frozenset[str]:
    """Ids of the shapes meeting the prob."""
    return frozenset(s.id for s in f if s.meets(p.rect))


def find_root(p: Prob, f: Family) -> Optional[Rect]:
    """The canonical root [l(P), x0] x [b(P), t(P)], or None.

    x0 is halfway between l(P) and the leftmost x at which a shape meets P.
    """
    P = p.rect
    first_hit = P.xhi
    for s in f:
        for q in s.rects:
            if q.intersects(P):
                first_hit = min(first_hit, max(q.xlo, P.xlo))
    if first_hit <= P.xlo:
        return None
    return Rect(P.xlo, (P.xlo + first_hit) / 2, P.ylo, P.yhi)


def stability_failures(p: Prob, f: Family) -> list[str]:
    """Failed items among root, disjoint, enclosing and crossing.

    Crossing is taken vertically. Once one root lies in every neighbour's
    territory all roots do, so the canonical root decides the first item.
    """
    failures = []
    nbrs = [s for s in f if s.meets(p.rect)]
    root = find_root(p, f)
    if root is None or not all(inside_territories(root, a) for a in nbrs):
        failures.append("root")
    if any(a.meets(b) for a, b in combinations(nbrs, 2)):
        failures.append("disjoint")
    if not all(a.b < p.rect.ylo and p.rect.yhi < a.t for a in nbrs):
        failures.append("enclosing")
    if p.rect.height == 0 or not all(crosses_vertically(a, p.rect) for a in nbrs):
        failures.append("crossing")
    if failures:
        logger.debug(f"Prob {p.id} is not stable: {failures}")
    return failures


def is_stable_prob(p: Prob, f: Family) -> bool:
    return not stability_failures(p, f)


def overlapping_probs(probs: list[Prob]) -> list[tuple[str, str]]:
    return [(p.id, q.id) for p, q in combinations(probs, 2) if p.rect.intersects(q.rect)]
