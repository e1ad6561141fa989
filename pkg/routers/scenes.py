from typing import List, Optional, Union

from fastapi import APIRouter, Query
from fastapi.responses import Response
from pydantic import BaseModel, Field

from burling.derive import graph_with_witness
from construction.sequence import burling_sequence
from geometry.exact import Rect
from geometry.region import Region
from models import GraphDoc, SceneDoc, VerifyReport
from serializers.documents import doc_to_scene, graph_to_doc, scene_to_doc
from serializers.svg import render_svg
from shapes.generators import preset
from shapes.pouna import Shape

from .utils import http_errors

router = APIRouter(prefix="/scenes", tags=["scenes"])


class GenerateRequest(BaseModel):
    shape: Union[str, List[List[str]]] = Field(
        "frame", description='A preset name ("frame", "gamma") or a list of rects'
    )
    k: int = Field(..., description="Level of the family to build")
    max_level: Optional[int] = None


class CheckRequest(BaseModel):
    scene: SceneDoc
    sample: Optional[int] = Field(
        None, description="Check constraints on this many random pairs and triples"
    )
    seed: Optional[int] = None
    constraints: bool = True
    stability: bool = True


def _shape(spec: Union[str, List[List[str]]]) -> Shape:
    if isinstance(spec, str):
        return preset(spec)
    return Shape.of(Region(Rect.from_strings(r) for r in spec))


@router.post("/generate", response_model=SceneDoc, response_model_exclude_none=True)
def generate(request: GenerateRequest):
    with http_errors():
        sc = burling_sequence(_shape(request.shape), request.k, max_level=request.max_level)
        return scene_to_doc(sc)


@router.post("/check", response_model=VerifyReport)
def check(request: CheckRequest):
    with http_errors():
        sc = doc_to_scene(request.scene)
        return sc.verify(
            sample=request.sample,
            seed=request.seed,
            constraints=request.constraints,
            stability=request.stability,
        )


@router.post("/graph", response_model=GraphDoc, response_model_exclude_none=True)
def graph(scene: SceneDoc):
    with http_errors():
        sc = doc_to_scene(scene)
        g, prec = graph_with_witness(sc.family)
        return graph_to_doc(g, witness_prec=prec)


@router.post("/render")
def render(scene: SceneDoc, territories: bool = Query(False)):
    with http_errors():
        svg = render_svg(doc_to_scene(scene), territories=territories)
    return Response(content=svg, media_type="image/svg+xml")
