"""Oriented graphs, (set, prec, arrow) triples and the Burling-set axioms.

A triple (S, ≺, ↷) is a Burling set when ≺ is a strict partial order, ↷ has
no directed cycles (loops and 2-cycles included) and

    A1  x ≺ y and x ≺ z             =>  y ≺ z or z ≺ y      (y ≠ z)
    A2  x ↷ y and x ↷ z             =>  y ≺ z or z ≺ y      (y ≠ z)
    A3  x ↷ y and x ≺ z             =>  y ≺ z               (y ≠ z)
    A4  x ↷ y and y ≺ z             =>  x ↷ z or x ≺ z

A pair may lie in both ≺ and ↷; recognition reports such pairs on the
certificate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import networkx as nx

from errors import GraphError

logger = logging.getLogger(__name__)

Pair = tuple[str, str]


def _check_vertices(vertices: tuple[str, ...], pairs: Iterable[Pair], what: str):
    if len(set(vertices)) != len(vertices):
        raise GraphError("duplicate-vertex", "vertex ids must be unique")
    known = set(vertices)
    for u, v in pairs:
        if u not in known or v not in known:
            raise GraphError("bad-vertex", f"{what} ({u}, {v}) uses an unknown vertex")


def _induced_pairs(pairs: frozenset[Pair], keep: set[str]) -> frozenset[Pair]:
    return frozenset((u, v) for u, v in pairs if u in keep and v in keep)


def _subset(vertices: tuple[str, ...], subset: Iterable[str]) -> tuple[str, ...]:
    keep = set(subset)
    unknown = keep - set(vertices)
    if unknown:
        raise GraphError("bad-vertex", f"unknown vertices {sorted(unknown)}")
    return tuple(v for v in vertices if v in keep)


@dataclass(frozen=True)
class OGraph:
    """Oriented graph: a loop-free set of arcs on a list of vertex ids."""

    vertices: tuple[str, ...]
    arcs: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(
            self, "arcs", frozenset((str(u), str(v)) for u, v in self.arcs)
        )
        _check_vertices(self.vertices, self.arcs, "arc")
        loops = [u for u, v in self.arcs if u == v]
        if loops:
            raise GraphError("loop", f"loop at vertex {loops[0]}")

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(sorted(self.arcs, key=self.pair_key))
        return g

    def underlying(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(sorted(self.arcs, key=self.pair_key))
        return g

    def pair_key(self, pair: Pair) -> tuple[int, int]:
        index = self.index
        return index[pair[0]], index[pair[1]]

    @property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def sorted_arcs(self) -> list[Pair]:
        return sorted(self.arcs, key=self.pair_key)

    def induced(self, subset: Iterable[str]) -> OGraph:
        kept = _subset(self.vertices, subset)
        return OGraph(kept, _induced_pairs(self.arcs, set(kept)))


@dataclass(frozen=True)
class Triple:
    """(elements, prec, arrow); the axioms are checked, never assumed."""

    elements: tuple[str, ...]
    prec: frozenset[Pair]
    arrow: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(v) for v in self.elements))
        for name in ("prec", "arrow"):
            pairs = frozenset((str(u), str(v)) for u, v in getattr(self, name))
            object.__setattr__(self, name, pairs)
        _check_vertices(self.elements, self.prec | self.arrow, "pair")

    @classmethod
    def of(cls, g: OGraph, prec: Iterable[Pair]) -> Triple:
        return cls(g.vertices, frozenset(prec), g.arcs)

    def induced(self, subset: Iterable[str]) -> Triple:
        kept = _subset(self.elements, subset)
        keep = set(kept)
        return Triple(kept, _induced_pairs(self.prec, keep), _induced_pairs(self.arrow, keep))

    def graph(self) -> OGraph:
        return OGraph(self.elements, self.arrow)


@dataclass(frozen=True)
class Violation:
    axiom: str
    ids: tuple[str, ...]


def check_axioms(t: Triple, cap: Optional[int] = None) -> list[Violation]:
    """All axiom violations of `t` in a deterministic order; empty iff a Burling set."""
    out: list[Violation] = []

    def report(axiom: str, *ids: str) -> bool:
        out.append(Violation(axiom, tuple(ids)))
        return cap is not None and len(out) >= cap

    index = {v: i for i, v in enumerate(t.elements)}
    order = lambda pair: (index[pair[0]], index[pair[1]])  # noqa: E731
    prec_succ: dict[str, set[str]] = {v: set() for v in t.elements}
    arrow_succ: dict[str, set[str]] = {v: set() for v in t.elements}
    for u, v in t.prec:
        prec_succ[u].add(v)
    for u, v in t.arrow:
        arrow_succ[u].add(v)

    def ordered(vs: set[str]) -> list[str]:
        return sorted(vs, key=index.__getitem__)

    def comparable(y: str, z: str) -> bool:
        return z in prec_succ[y] or y in prec_succ[z]

    # strict partial order
    for x, y in sorted(t.prec, key=order):
        if x == y:
            if report("not-strict-order", x):
                return out
        elif index[x] < index[y] and x in prec_succ[y]:
            if report("not-strict-order", x, y):
                return out
        for z in ordered(prec_succ[y]):
            if z not in prec_succ[x]:
                if report("not-strict-order", x, y, z):
                    return out

    g = nx.DiGraph()
    g.add_nodes_from(t.elements)
    g.add_edges_from(sorted(t.arrow, key=order))
    if not nx.is_directed_acyclic_graph(g):
        cycle = nx.find_cycle(g)
        if report("arrow-cycle", *(u for u, _ in cycle)):
            return out

    for x in t.elements:
        for y, z in combinations(ordered(prec_succ[x]), 2):
            if not comparable(y, z):
                if report("A1", x, y, z):
                    return out
        for y, z in combinations(ordered(arrow_succ[x]), 2):
            if not comparable(y, z):
                if report("A2", x, y, z):
                    return out

    for x, y in sorted(t.arrow, key=order):
        for z in ordered(prec_succ[x]):
            if z != y and z not in prec_succ[y]:
                if report("A3", x, y, z):
                    return out
        for z in ordered(prec_succ[y]):
            if z not in arrow_succ[x] and z not in prec_succ[x]:
                if report("A4", x, y, z):
                    return out

    if out:
        logger.debug(f"{len(out)} axiom violation(s), first {out[0]}")
    return out


def is_burling_set(t: Triple) -> bool:
    return not check_axioms(t, cap=1)
