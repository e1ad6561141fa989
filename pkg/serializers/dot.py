"""DOT export of oriented and plain graphs, optionally annotated with a verdict."""

from __future__ import annotations

import logging
from typing import Optional, Union

import graphviz
import networkx as nx

from burling.axioms import OGraph
from burling.recognition import Cert
from models import AnalysisDoc

logger = logging.getLogger(__name__)


def _analysis_lines(a: AnalysisDoc) -> list[str]:
    lines = []
    if a.clique_number is not None:
        lines.append(f"ω = {a.clique_number}")
    if a.triangle_free is not None:
        lines.append("triangle-free" if a.triangle_free else "has triangles")
    if a.chromatic is not None:
        c = a.chromatic
        lines.append(f"χ = {c.exact}" if c.exact is not None else f"χ in [{c.lower}, {c.upper}]")
    return lines


def graph_to_dot(
    g: Union[OGraph, nx.Graph],
    cert: Optional[Cert] = None,
    analysis: Optional[AnalysisDoc] = None,
    output_file: Optional[str] = None,
    format: str = "svg",
) -> str:
    """DOT source for g.

    With a certificate the graph label carries the verdict, ≺-pairs of the
    witness are drawn dashed grey and the vertices of a violated axiom are
    filled red. A plain graph accepted with an orientation is drawn oriented.
    With an analysis the label also gives ω, triangle-freeness and the χ bracket.
    """
    if isinstance(g, OGraph):
        vertices = list(g.vertices)
        pairs = g.sorted_arcs()
        directed = True
    elif cert is not None and cert.orientation is not None:
        vertices = [str(v) for v in g.nodes]
        pairs = sorted(cert.orientation)
        directed = True
    else:
        vertices = [str(v) for v in g.nodes]
        pairs = sorted(tuple(sorted((str(u), str(v)))) for u, v in g.edges)
        directed = False

    if directed:
        dot = graphviz.Digraph(comment="Oriented intersection graph")
    else:
        dot = graphviz.Graph(comment="Intersection graph")
    dot.attr(rankdir="LR", bgcolor="white", fontname="Arial")
    dot.attr("node", shape="ellipse", style="filled", fillcolor="white")

    bad = set()
    lines = []
    if cert is not None:
        lines.append(f"{cert.verdict} ({cert.nodes} nodes)")
        if cert.violated is not None:
            lines.append(f"violates {cert.violated.axiom}")
            bad = set(cert.violated.ids)
    if analysis is not None:
        lines.extend(_analysis_lines(analysis))
    if lines:
        dot.attr(label="\\n".join(lines), labelloc="t")

    for v in vertices:
        dot.node(v, v, fillcolor="lightcoral" if v in bad else "white")
    for u, v in pairs:
        dot.edge(u, v)

    if cert is not None and cert.witness_prec is not None:
        for u, v in sorted(cert.witness_prec):
            dot.edge(u, v, style="dashed", color="gray", constraint="false", label="≺")

    if output_file:
        dot.render(output_file, format=format, cleanup=True)
        logger.info(f"Rendered {output_file}.{format}")
    return dot.source
