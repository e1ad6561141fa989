from typing import Optional

import networkx as nx

from analysis.coloring import chromatic_number
from analysis.graphs import clique_number, triangle_free
from models import AnalysisDoc
from serializers.documents import bracket_to_doc


def analyze(
    g: nx.Graph, chi: bool = True, triangles: bool = True, budget: Optional[int] = None
) -> AnalysisDoc:
    """Size and clique number, plus triangle-freeness and χ when asked for."""
    return AnalysisDoc(
        vertices=g.number_of_nodes(),
        edges=g.number_of_edges(),
        clique_number=clique_number(g),
        triangle_free=triangle_free(g) if triangles else None,
        chromatic=bracket_to_doc(chromatic_number(g, budget=budget)) if chi else None,
    )
