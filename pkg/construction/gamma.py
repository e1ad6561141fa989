"""One insertion step: a stretched copy of the base shape on top of every prob.

For a prob P with top third P↑ and bottom third P↓, the copy S_P is the base
S matched onto P↑ and then stretched horizontally about l(P↑) by
2 w(S) / (l(E) - l(S)), which pushes its subterritory E_P right of box(F).
Each P is replaced by the prob defined by E_P and the prob defined by P↓.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from construction.probs import Prob, neighbors, prob_defined_by
from construction.scene import Scene
from errors import ConstructionError
from geometry.exact import Rect, Transform
from relations.relations import Family, arrow
from shapes.pouna import Provenance, Shape, territory_meets

logger = logging.getLogger(__name__)


def top_third(P: Rect) -> Rect:
    return Rect(P.xlo, P.xhi, (P.ylo + 2 * P.yhi) / 3, P.yhi)


def bottom_third(P: Rect) -> Rect:
    return Rect(P.xlo, P.xhi, P.ylo, (2 * P.ylo + P.yhi) / 3)


def insertion_transform(S: Rect, E: Rect, P: Rect) -> Transform:
    """T_2 ∘ T_1, sending box(S) onto the top third of P and stretching it."""
    up = top_third(P)
    t1 = Transform.matching(S, up)
    k = 2 * S.width / (E.xlo - S.xlo)
    t2 = Transform(k, 1, up.xlo * (1 - k), 0)
    return t2.compose(t1)


@dataclass(frozen=True)
class Insertion:
    prob: Prob
    shape: Shape
    sub: Rect
    transform: Transform


def _fail(detail: str):
    raise ConstructionError("construction-invariant-violated", detail)


def _check_insertions(family: Family, extended: Family, done: list[Insertion]):
    right = family.box().xhi
    for ins in done:
        if not ins.transform.is_positive():
            _fail(f"insertion transform for {ins.prob.id} is not positive")
        if not ins.sub.xlo > right:
            _fail(f"subterritory of {ins.shape.id} starts at {ins.sub.xlo}, inside box(F)")
    for ins in done:
        nbrs = neighbors(ins.prob, family)
        for a in family:
            if arrow(ins.shape, a) != (a.id in nbrs):
                _fail(f"{ins.shape.id} ↷ {a.id} disagrees with N({ins.prob.id})")
        for b in extended:
            if b.id != ins.shape.id and ins.shape.box.intersects(b.box) and arrow(b, ins.shape):
                _fail(f"{b.id} ↷ {ins.shape.id}")
        for other in done:
            if other is ins:
                continue
            q = other.prob.rect
            if ins.shape.meets(q) or ins.shape.meets(other.shape):
                _fail(f"{ins.shape.id} meets prob {other.prob.id} or its copy")
            if ins.shape.box.intersects(q) and territory_meets(ins.shape, q):
                _fail(f"Ter({ins.shape.id}) meets prob {other.prob.id}")


def gamma(sc: Scene, check: bool = True) -> Scene:
    base = sc.strong_base
    E = sc.sub.rect
    if not sc.probs:
        return Scene(sc.family, [], sc.base, sc.reflected, sc.sub, sc.level, sc.next_id)

    ids, next_id = sc.fresh_ids(len(sc.probs))
    done = []
    for p, new_id in zip(sc.probs, ids):
        t = insertion_transform(base.box, E, p.rect)
        shape = base.transformed(t, id=new_id, provenance=Provenance(sc.level + 1, p.id, t))
        done.append(Insertion(p, shape, t.apply_rect(E), t))

    extended = Family(list(sc.family) + [ins.shape for ins in done], base=sc.family.base, validate=False)
    bbox = extended.box()
    probs = []
    for ins in done:
        probs.append(prob_defined_by(ins.sub, bbox, id=f"p{len(probs)}"))
        probs.append(prob_defined_by(bottom_third(ins.prob.rect), bbox, id=f"p{len(probs)}"))

    if check:
        _check_insertions(sc.family, extended, done)
        for ins, (p1, p2) in zip(done, zip(probs[::2], probs[1::2])):
            if neighbors(p1, extended) != {ins.shape.id}:
                _fail(f"N({p1.id}) is not {{{ins.shape.id}}}")
            if not neighbors(p2, extended) <= neighbors(ins.prob, sc.family):
                _fail(f"N({p2.id}) is not inside N({ins.prob.id})")

    logger.debug(f"Inserted {len(done)} shapes into a family of {len(sc.family)}")
    return Scene(extended, probs, sc.base, sc.reflected, sc.sub, sc.level, next_id)
