import logging
from typing import Optional

from burling.axioms import OGraph, Pair, Triple, check_axioms
from errors import ConstraintError
from relations.constraints import check_constraints, oriented_intersection_graph
from relations.relations import Family, RelationTable

logger = logging.getLogger(__name__)


def derive_triple(f: Family, table: Optional[RelationTable] = None, verify: bool = True) -> Triple:
    """(F, ≺, ↷) of a constrained family.

    A family satisfying C1-C5 always yields a Burling set, so an axiom
    violation here is reported as an internal error.
    """
    table = table or RelationTable(f)
    report = check_constraints(f, constraints=("C1", "C2", "C3", "C4", "C5"), table=table)
    if not report.passed:
        raise ConstraintError(
            "not-constrained", f"family fails {', '.join(report.failing())}"
        )
    triple = Triple(
        tuple(f.ids), table.id_pairs(table.precs), table.id_pairs(table.arrows)
    )
    if verify:
        violations = check_axioms(triple, cap=1)
        if violations:
            raise ConstraintError(
                "internal-error", f"constrained family breaks {violations[0]}"
            )
    logger.info(
        f"Derived triple on {len(f)} shapes: {len(triple.prec)} prec, {len(triple.arrow)} arrow"
    )
    return triple


def graph_with_witness(
    f: Family, table: Optional[RelationTable] = None
) -> tuple[OGraph, Optional[frozenset[Pair]]]:
    """The oriented intersection graph, which needs only C1, and the geometric ≺
    when the family also satisfies C2-C5 (None otherwise)."""
    table = table or RelationTable(f)
    g = oriented_intersection_graph(f, table)
    try:
        return g, derive_triple(f, table).prec
    except ConstraintError as e:
        if e.code != "not-constrained":
            raise
        logger.info(f"No geometric witness: {e.detail}")
        return g, None
