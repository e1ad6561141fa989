from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, computed_field

SCENE_VERSION = 1
GRAPH_VERSION = 1

# Coordinates are always "p/q" strings, never JSON numbers
RectStrings = List[str]


class ConstraintResult(BaseModel):
    checked: int = Field(0, description="Number of pairs, triples or shapes examined")
    violations: List[List[str]] = Field(
        default_factory=list, description="Ids of the offending tuples"
    )
    truncated: bool = Field(
        False, description="More violations were found than the report lists"
    )

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.violations


class ConstraintReport(BaseModel):
    constraints: Dict[str, ConstraintResult]
    sampled: bool = False

    @computed_field
    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.constraints.values())

    def failing(self) -> List[str]:
        return [name for name, result in self.constraints.items() if not result.passed]


class StabilityResult(BaseModel):
    prob: str
    failures: List[str] = Field(
        default_factory=list,
        description="Failed stability items: root, disjoint, crossing, enclosing",
    )

    @computed_field
    @property
    def stable(self) -> bool:
        return not self.failures


class VerifyReport(BaseModel):
    level: int
    constraints: ConstraintReport
    stability: List[StabilityResult] = Field(default_factory=list)
    overlapping_probs: List[List[str]] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return (
            self.constraints.passed
            and not self.overlapping_probs
            and all(s.stable for s in self.stability)
        )


class ProvenanceDoc(BaseModel):
    level: int
    prob: Optional[str] = None
    transform: RectStrings = Field(
        default_factory=lambda: ["1", "1", "0", "0"],
        description="Coefficients a, b, c, d of (x, y) -> (ax + c, by + d)",
    )


class ShapeDoc(BaseModel):
    id: str
    rects: List[RectStrings]
    provenance: Optional[ProvenanceDoc] = None


class ProbDoc(BaseModel):
    id: str
    rect: RectStrings


class SubterritoryDoc(BaseModel):
    rect: RectStrings
    crossing_witness: List[RectStrings] = Field(default_factory=list)


class SceneDoc(BaseModel):
    version: int = SCENE_VERSION
    level: int
    base_shape: List[RectStrings]
    reflected: bool = False
    subterritory: Optional[SubterritoryDoc] = None
    shapes: List[ShapeDoc]
    probs: List[ProbDoc] = Field(default_factory=list)


class GraphDoc(BaseModel):
    version: int = GRAPH_VERSION
    vertices: List[str]
    arcs: Optional[List[List[str]]] = None
    edges: Optional[List[List[str]]] = None
    witness_prec: Optional[List[List[str]]] = None


class ViolationDoc(BaseModel):
    axiom: str
    ids: List[str]


class CertDoc(BaseModel):
    verdict: Literal["accepted", "rejected", "budget-exceeded"]
    nodes: int = 0
    witness_prec: Optional[List[List[str]]] = None
    orientation: Optional[List[List[str]]] = None
    violated: Optional[ViolationDoc] = None
    prec_and_arrow: List[List[str]] = Field(
        default_factory=list,
        description="Pairs of the witness that are both in prec and arcs",
    )


class ChromaticDoc(BaseModel):
    lower: int
    upper: int
    nodes: int = 0

    @computed_field
    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.lower == self.upper else None


class AnalysisDoc(BaseModel):
    vertices: int
    edges: int
    clique_number: Optional[int] = None
    triangle_free: Optional[bool] = None
    chromatic: Optional[ChromaticDoc] = None
