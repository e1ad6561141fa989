from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from config import settings
from construction.probs import Prob, overlapping_probs, stability_failures
from models import ConstraintReport, StabilityResult, VerifyReport
from relations.constraints import check_constraints
from relations.relations import Family
from shapes.crossing import SubterritoryCert
from shapes.pouna import Shape, reflect

logger = logging.getLogger(__name__)


@dataclass
class Scene:
    """A constrained family with its probs, the base shape and its subterritory.

    `base` is the shape as given; when `reflected` is set the family is built
    from its horizontal reflection, and `sub` is a subterritory of that one.
    """

    family: Family
    probs: list[Prob]
    base: Shape
    reflected: bool
    sub: SubterritoryCert
    level: int
    next_id: int = field(default=0)

    def __post_init__(self):
        if not self.next_id:
            self.next_id = len(self.family)

    @property
    def strong_base(self) -> Shape:
        return reflect(self.base) if self.reflected else self.base

    def fresh_ids(self, count: int) -> tuple[list[str], int]:
        """`count` unused shape ids and the counter to continue from."""
        used = set(self.family.ids)
        out, n = [], self.next_id
        while len(out) < count:
            candidate = f"s{n}"
            n += 1
            if candidate not in used:
                out.append(candidate)
        return out, n

    def verify(
        self,
        sample: Optional[int] = None,
        seed: Optional[int] = None,
        constraints: bool = True,
        stability: bool = True,
    ) -> VerifyReport:
        """Re-check from scratch: probs disjoint, probs stable, C1-C6.

        With `sample` set the constraints are checked on random pairs and triples.
        Turning off `constraints` or `stability` leaves that part of the report empty.
        """
        report = VerifyReport(
            level=self.level,
            constraints=check_constraints(self.family, sample=sample, seed=seed)
            if constraints
            else ConstraintReport(constraints={}),
            stability=[
                StabilityResult(prob=p.id, failures=stability_failures(p, self.family))
                for p in self.probs
            ]
            if stability
            else [],
            overlapping_probs=[list(pair) for pair in overlapping_probs(self.probs)]
            if stability
            else [],
        )
        logger.info(
            f"Level {self.level} scene with {len(self.family)} shapes and "
            f"{len(self.probs)} probs: {'valid' if report.passed else 'INVALID'}"
        )
        return report

    def verify_default(self) -> VerifyReport:
        """Exact up to the configured level, sampled above it."""
        if self.level <= settings.verify_max_level:
            return self.verify()
        return self.verify(sample=settings.sample_size)
