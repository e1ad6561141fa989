import logging
from typing import Iterable

import networkx as nx

from errors import GraphError

logger = logging.getLogger(__name__)


def clique_number(g: nx.Graph) -> int:
    if g.number_of_nodes() == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(g))


def triangle_free(g: nx.Graph) -> bool:
    return not any(nx.triangles(g).values())


def induced_subgraph(g: nx.Graph, vertices: Iterable) -> nx.Graph:
    keep = list(dict.fromkeys(vertices))
    unknown = [v for v in keep if v not in g]
    if unknown:
        raise GraphError("bad-vertex", f"unknown vertices {unknown}")
    return g.subgraph(keep).copy()
