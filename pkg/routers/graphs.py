from typing import Optional

from fastapi import APIRouter
from pydantic import BaseModel

from analysis.report import analyze as analyze_graph
from burling.axioms import OGraph
from burling.recognition import recognize_oriented, recognize_unoriented
from errors import GraphError
from models import AnalysisDoc, CertDoc, GraphDoc
from serializers.documents import cert_to_doc, doc_to_graph, underlying

from .utils import http_errors

router = APIRouter(prefix="/graphs", tags=["graphs"])


class RecognizeRequest(BaseModel):
    graph: GraphDoc
    oriented: bool = False
    budget: Optional[int] = None


class AnalyzeRequest(BaseModel):
    graph: GraphDoc
    chi: bool = True
    triangle_free: bool = True
    budget: Optional[int] = None


@router.post("/recognize", response_model=CertDoc, response_model_exclude_none=True)
def recognize(request: RecognizeRequest):
    """
    Recognition verdict with its certificate.
    A "rejected" or "budget-exceeded" verdict is still a 200 response.
    """
    with http_errors():
        if request.oriented:
            g = doc_to_graph(request.graph)
            if not isinstance(g, OGraph):
                raise GraphError("no-arcs", "oriented recognition needs a graph with arcs")
            witness = request.graph.witness_prec
            hint = [tuple(p) for p in witness] if witness else None
            return cert_to_doc(recognize_oriented(g, budget=request.budget, hint=hint), g)
        g = underlying(request.graph)
        return cert_to_doc(recognize_unoriented(g, budget=request.budget))


@router.post("/analyze", response_model=AnalysisDoc, response_model_exclude_none=True)
def analyze(request: AnalyzeRequest):
    with http_errors():
        return analyze_graph(
            underlying(request.graph),
            chi=request.chi,
            triangles=request.triangle_free,
            budget=request.budget,
        )
