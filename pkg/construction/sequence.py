"""The recursive step and the sequence of constrained families (F_k, P_k)."""

from __future__ import annotations

import logging
from typing import Optional

from config import settings
from construction.gamma import gamma
from construction.probs import Prob, find_root, prob_defined_by
from construction.scene import Scene
from errors import ConstructionError
from geometry.exact import Transform
from relations.relations import Family
from shapes.crossing import find_subterritory
from shapes.pouna import Provenance, Shape, strongify

logger = logging.getLogger(__name__)


def expected_counts(k: int) -> tuple[int, int]:
    """(|F_k|, |P_k|) from a' = a + p(a + p), p' = 2p², a_1 = p_1 = 1."""
    if k < 1:
        raise ConstructionError("bad-k", f"k must be positive, got {k}")
    a, p = 1, 1
    for _ in range(k - 1):
        a, p = a + p * (a + p), 2 * p * p
    return a, p


def _copy_provenance(s: Shape, level: int, prob: str, t: Transform) -> Provenance:
    inner = s.provenance.transform if s.provenance else Transform.identity()
    return Provenance(level, prob, t.compose(inner))


def next_f(sc: Scene, verify: bool = True) -> Scene:
    """Insert a scaled copy of Γ(F, P) into a root of every prob.

    Every copy sits inside box(F), so the new probs are defined with respect to
    box(F), which is also the box of the new family.
    """
    level = sc.level + 1
    inserted = gamma(sc)
    inner_box = inserted.family.box()
    bbox = sc.family.box()

    ids, next_id = sc.fresh_ids(len(sc.probs) * len(inserted.family))
    ids = iter(ids)
    shapes = list(sc.family)
    probs: list[Prob] = []
    for p in sc.probs:
        root = find_root(p, sc.family)
        if root is None:
            raise ConstructionError(
                "construction-invariant-violated", f"prob {p.id} has no root"
            )
        t = Transform.matching(inner_box, root)
        for s in inserted.family:
            shapes.append(
                s.transformed(t, id=next(ids), provenance=_copy_provenance(s, level, p.id, t))
            )
        for q in inserted.probs:
            probs.append(prob_defined_by(t.apply_rect(q.rect), bbox, id=f"p{len(probs)}"))

    family = Family(shapes, base=sc.family.base, validate=False)
    if family.box() != bbox:
        raise ConstructionError(
            "construction-invariant-violated", "copies leave the bounding box of F"
        )
    out = Scene(family, probs, sc.base, sc.reflected, sc.sub, level, next_id)
    logger.info(f"Level {level}: {len(family)} shapes, {len(probs)} probs")

    if verify:
        report = out.verify_default()
        if not report.passed:
            raise ConstructionError(
                "construction-invariant-violated",
                f"level {level} fails: constraints {report.constraints.failing()}, "
                f"unstable {[s.prob for s in report.stability if not s.stable]}, "
                f"overlapping {report.overlapping_probs}",
            )
    return out


def initial_scene(S: Shape) -> Scene:
    """F_1 = {S} and P_1 = {the prob defined by a subterritory of S}."""
    strong, reflected = strongify(S)
    sub = find_subterritory(strong)
    first = Shape("s0", strong.region, Provenance(1))
    family = Family([first], base=(S, reflected), validate=False)
    prob = prob_defined_by(sub.rect, first.box, id="p0")
    return Scene(family, [prob], S, reflected, sub, 1)


def burling_sequence(
    S: Shape,
    k: int,
    max_level: Optional[int] = None,
    verify: bool = True,
) -> Scene:
    """(F_k, P_k) for the base shape S."""
    max_level = settings.max_level if max_level is None else max_level
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ConstructionError("bad-k", f"k must be a positive integer, got {k!r}")
    if k > max_level:
        raise ConstructionError(
            "bad-k", f"k = {k} exceeds the level cap {max_level}; raise max_level to go further"
        )
    sc = initial_scene(S)
    if verify:
        report = sc.verify()
        if not report.passed:
            raise ConstructionError("construction-invariant-violated", "level 1 scene is invalid")
    for _ in range(k - 1):
        sc = next_f(sc, verify=verify)
    return sc
