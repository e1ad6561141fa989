"""JSON documents for scenes, graphs, certificates and diagnostics.

Coordinates travel as "p/q" strings so rationals survive exactly.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Optional, Type, TypeVar, Union

import networkx as nx
from pydantic import BaseModel, ValidationError

from analysis.coloring import ChromaticBracket
from burling.axioms import OGraph, Pair
from burling.recognition import Cert
from construction.probs import Prob
from construction.scene import Scene
from errors import BurlingError, DocumentError
from geometry.exact import Rect, Transform, parse_rat
from geometry.region import Region
from models import (
    GRAPH_VERSION,
    SCENE_VERSION,
    CertDoc,
    ChromaticDoc,
    GraphDoc,
    ProbDoc,
    ProvenanceDoc,
    SceneDoc,
    ShapeDoc,
    SubterritoryDoc,
    ViolationDoc,
)
from relations.relations import Family
from shapes.crossing import SubterritoryCert, find_subterritory, is_subterritory
from shapes.generators import preset
from shapes.pouna import Provenance, Shape, reflect

logger = logging.getLogger(__name__)

Doc = TypeVar("Doc", bound=BaseModel)


def _rects(region: Region) -> list[list[str]]:
    return [r.as_strings() for r in region.rects]


def _region(rects: list[list[str]]) -> Region:
    return Region(Rect.from_strings(r) for r in rects)


def scene_to_doc(sc: Scene) -> SceneDoc:
    shapes = []
    for s in sc.family:
        provenance = None
        if s.provenance is not None:
            provenance = ProvenanceDoc(
                level=s.provenance.level,
                prob=s.provenance.prob,
                transform=s.provenance.transform.coefficients(),
            )
        shapes.append(ShapeDoc(id=s.id, rects=_rects(s.region), provenance=provenance))
    return SceneDoc(
        version=SCENE_VERSION,
        level=sc.level,
        base_shape=_rects(sc.base.region),
        reflected=sc.reflected,
        subterritory=SubterritoryDoc(
            rect=sc.sub.rect.as_strings(),
            crossing_witness=[r.as_strings() for r in sc.sub.crossing_witness],
        ),
        shapes=shapes,
        probs=[ProbDoc(id=p.id, rect=p.rect.as_strings()) for p in sc.probs],
    )


def doc_to_scene(doc: SceneDoc) -> Scene:
    if doc.version != SCENE_VERSION:
        raise DocumentError("bad-version", f"scene version {doc.version}, expected {SCENE_VERSION}")
    base = Shape.of(_region(doc.base_shape), "S")
    strong = reflect(base) if doc.reflected else base
    shapes = []
    for s in doc.shapes:
        provenance = None
        if s.provenance is not None:
            provenance = Provenance(
                s.provenance.level,
                s.provenance.prob,
                Transform(*(parse_rat(v) for v in s.provenance.transform)),
            )
        shapes.append(Shape(s.id, _region(s.rects), provenance))
    family = Family(shapes, base=(base, doc.reflected))
    if doc.subterritory is None:
        sub = find_subterritory(strong)
    else:
        rect = Rect.from_strings(doc.subterritory.rect)
        if not is_subterritory(rect, strong):
            raise DocumentError("bad-subterritory", f"{doc.subterritory.rect} is not a subterritory")
        sub = SubterritoryCert(rect, [Rect.from_strings(r) for r in doc.subterritory.crossing_witness])
    probs = [Prob(p.id, Rect.from_strings(p.rect)) for p in doc.probs]
    return Scene(family, probs, base, doc.reflected, sub, doc.level)


def shape_from_json(text: str, id: str = "S") -> Shape:
    """A shape file: {"rects": [[xlo, xhi, ylo, yhi], ...]} or the bare rect list."""
    data = _loads(text)
    rects = data.get("rects") if isinstance(data, dict) else data
    if not isinstance(rects, list):
        raise DocumentError("bad-document", "a shape file holds a list of rects")
    return Shape.of(_region(rects), id)


def _pairs(pairs, key) -> list[list[str]]:
    return [list(p) for p in sorted(pairs, key=key)]


def graph_to_doc(g: Union[OGraph, nx.Graph], witness_prec: Optional[frozenset[Pair]] = None) -> GraphDoc:
    if isinstance(g, OGraph):
        return GraphDoc(
            vertices=list(g.vertices),
            arcs=_pairs(g.arcs, g.pair_key),
            witness_prec=_pairs(witness_prec, g.pair_key) if witness_prec is not None else None,
        )
    vertices = [str(v) for v in g.nodes]
    index = {v: i for i, v in enumerate(vertices)}
    edges = sorted(
        (sorted((str(u), str(v)), key=index.__getitem__) for u, v in g.edges),
        key=lambda e: (index[e[0]], index[e[1]]),
    )
    return GraphDoc(vertices=vertices, edges=edges)


def doc_to_graph(doc: GraphDoc) -> Union[OGraph, nx.Graph]:
    """An OGraph when the document has arcs, otherwise an undirected graph."""
    if doc.version != GRAPH_VERSION:
        raise DocumentError("bad-version", f"graph version {doc.version}, expected {GRAPH_VERSION}")
    if doc.arcs is not None:
        return OGraph(tuple(doc.vertices), frozenset(_pair(a) for a in doc.arcs))
    g = nx.Graph()
    g.add_nodes_from(doc.vertices)
    known = set(doc.vertices)
    for e in doc.edges or []:
        u, v = _pair(e)
        if u not in known or v not in known:
            raise DocumentError("bad-vertex", f"edge {e} uses an unknown vertex")
        if u == v:
            raise DocumentError("loop", f"loop at vertex {u}")
        g.add_edge(u, v)
    return g


def underlying(doc: GraphDoc) -> nx.Graph:
    g = doc_to_graph(doc)
    return g.underlying() if isinstance(g, OGraph) else g


def _pair(p: list[str]) -> Pair:
    if len(p) != 2:
        raise DocumentError("bad-document", f"expected a pair, got {p}")
    return str(p[0]), str(p[1])


def cert_to_doc(cert: Cert, g: OGraph | None = None) -> CertDoc:
    key = g.pair_key if g is not None else None
    return CertDoc(
        verdict=cert.verdict,
        nodes=cert.nodes,
        witness_prec=_pairs(cert.witness_prec, key) if cert.witness_prec is not None else None,
        orientation=_pairs(cert.orientation, key) if cert.orientation is not None else None,
        violated=ViolationDoc(axiom=cert.violated.axiom, ids=list(cert.violated.ids))
        if cert.violated is not None
        else None,
        prec_and_arrow=[list(p) for p in cert.prec_and_arrow],
    )


def bracket_to_doc(b: ChromaticBracket) -> ChromaticDoc:
    return ChromaticDoc(lower=b.lower, upper=b.upper, nodes=b.nodes)


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError("parse-error", f"line {e.lineno}, column {e.colno}: {e.msg}")


def parse_document(text: str, model: Type[Doc]) -> Doc:
    data = _loads(text)
    version = model.model_fields.get("version")
    if version is not None and isinstance(data, dict) and data.get("version", version.default) != version.default:
        raise DocumentError(
            "bad-version", f"{model.__name__} version {data['version']!r}, expected {version.default}"
        )
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise DocumentError("bad-document", str(e))


def parse_scene(text: str) -> Scene:
    return doc_to_scene(parse_document(text, SceneDoc))


def dump_document(doc: BaseModel) -> str:
    return doc.model_dump_json(indent=2, exclude_none=True)


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise DocumentError("io-error", f"{path}: {e.strerror}")


def write_text(path: Union[str, Path], text: str):
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise DocumentError("io-error", f"{path}: {e.strerror}")
    logger.debug(f"Wrote {path}")


def error_doc(e: BurlingError) -> str:
    return json.dumps({"error": e.as_dict()})


def resolve_shape(spec: str) -> Shape:
    """A preset name ("frame", "gamma") or "file:PATH" holding a shape file."""
    if spec.startswith("file:"):
        return shape_from_json(read_text(spec[len("file:"):]))
    return preset(spec)
