"""Recognition of oriented and unoriented abstract Burling graphs.

An oriented graph is an abstract Burling graph when some strict order ≺ on its
vertices makes (V, ≺, arcs) a Burling set. Arcs are data, so only ≺ is
searched: every pair (u, v) is a boolean variable "u ≺ v", the axioms are
ground into clauses over these variables and a backtracking search with unit
propagation either finds a witness, proves there is none, or runs out of budget.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional

import networkx as nx

from burling.axioms import OGraph, Pair, Triple, Violation, check_axioms
from config import settings
from errors import GraphError

logger = logging.getLogger(__name__)

ACCEPTED = "accepted"
REJECTED = "rejected"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class Cert:
    verdict: str
    nodes: int = 0
    witness_prec: Optional[frozenset[Pair]] = None
    orientation: Optional[frozenset[Pair]] = None
    violated: Optional[Violation] = None
    # witness pairs that are both in prec and among the arcs
    prec_and_arrow: tuple[Pair, ...] = field(default=())

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPTED


class _BudgetExceeded(Exception):
    pass


class _PrecSearch:
    def __init__(self, g: OGraph, budget: int):
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.n = n = len(g.vertices)
        index = g.index
        self.value = [0] * (n * n)
        self.trail: list[int] = []
        self.queue: list[int] = []
        self.clauses: list[tuple[int, ...]] = []
        self.tags: list[Violation] = []
        self.occ: dict[int, list[int]] = {}
        self.units: list[tuple[int, Violation]] = []
        self.conflict: Optional[int] = None

        succ = {i: set() for i in range(n)}
        for u, v in g.arcs:
            succ[index[u]].add(index[v])
        self._build(succ)

        adj = [set() for _ in range(n)]
        for u in range(n):
            for v in succ[u]:
                adj[u].add(v)
                adj[v].add(u)
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        # most shared arrow-neighbours first
        pairs.sort(key=lambda p: (-len(adj[p[0]] & adj[p[1]]), p))
        self.order = [u * n + v for u, v in pairs]

    def _tag(self, axiom: str, *idx: int) -> Violation:
        return Violation(axiom, tuple(self.g.vertices[i] for i in idx))

    def _add(self, lits: Iterable[tuple[int, int, bool]], tag: Violation):
        n = self.n
        out: set[int] = set()
        for u, v, positive in lits:
            if u == v:
                if positive:
                    continue
                return
            out.add(2 * (u * n + v) + (0 if positive else 1))
        if any(lit ^ 1 in out for lit in out):
            return
        if not out:
            # an empty ground clause cannot be satisfied
            self.units.append((-1, tag))
            return
        if len(out) == 1:
            self.units.append((next(iter(out)), tag))
            return
        ci = len(self.clauses)
        clause = tuple(sorted(out))
        self.clauses.append(clause)
        self.tags.append(tag)
        for lit in clause:
            self.occ.setdefault(lit, []).append(ci)

    def _build(self, succ: dict[int, set[int]]):
        n = self.n
        for x, y in combinations(range(n), 2):
            self._add([(x, y, False), (y, x, False)], self._tag("not-strict-order", x, y))
        for x, y, z in permutations(range(n), 3):
            self._add(
                [(x, y, False), (y, z, False), (x, z, True)],
                self._tag("not-strict-order", x, y, z),
            )
        for x in range(n):
            for y, z in combinations([v for v in range(n) if v != x], 2):
                self._add(
                    [(x, y, False), (x, z, False), (y, z, True), (z, y, True)],
                    self._tag("A1", x, y, z),
                )
            for y, z in combinations(sorted(succ[x]), 2):
                self._add([(y, z, True), (z, y, True)], self._tag("A2", x, y, z))
            for y in sorted(succ[x]):
                for z in range(n):
                    if z != y:
                        self._add([(x, z, False), (y, z, True)], self._tag("A3", x, y, z))
                    if z not in succ[x]:
                        self._add([(y, z, False), (x, z, True)], self._tag("A4", x, y, z))

    def _lit_value(self, lit: int) -> int:
        v = self.value[lit >> 1]
        return v if lit & 1 == 0 else -v

    def _assign(self, lit: int) -> bool:
        var = lit >> 1
        val = 1 if lit & 1 == 0 else -1
        if self.value[var] != 0:
            return self.value[var] == val
        self.value[var] = val
        self.trail.append(var)
        self.queue.append(lit)
        return True

    def _propagate(self) -> bool:
        while self.queue:
            falsified = self.queue.pop() ^ 1
            for ci in self.occ.get(falsified, ()):
                free, count, satisfied = -1, 0, False
                for lit in self.clauses[ci]:
                    val = self._lit_value(lit)
                    if val == 1:
                        satisfied = True
                        break
                    if val == 0:
                        free, count = lit, count + 1
                if satisfied:
                    continue
                if count == 0:
                    self.conflict = ci
                    self.queue.clear()
                    return False
                if count == 1:
                    self._assign(free)
        return True

    def _undo(self, mark: int):
        while len(self.trail) > mark:
            self.value[self.trail.pop()] = 0

    def _next_free(self, pos: int) -> int:
        while pos < len(self.order) and self.value[self.order[pos]] != 0:
            pos += 1
        return pos

    def root(self) -> Optional[Violation]:
        """Assign the unit clauses; the violated axiom if they already conflict."""
        for lit, tag in self.units:
            if lit < 0 or not self._assign(lit):
                return tag
        if not self._propagate():
            return self.tags[self.conflict]
        return None

    def search(self) -> bool:
        stack: list[list[int]] = []  # [position in order, trail mark, branches tried]
        pos = 0
        while True:
            pos = self._next_free(pos)
            if pos == len(self.order):
                return True
            stack.append([pos, len(self.trail), 0])
            while True:
                if not stack:
                    return False
                frame = stack[-1]
                self._undo(frame[1])
                if frame[2] == 2:
                    stack.pop()
                    continue
                if self.nodes >= self.budget:
                    raise _BudgetExceeded
                self.nodes += 1
                # "not u ≺ v" first
                lit = 2 * self.order[frame[0]] + (1 if frame[2] == 0 else 0)
                frame[2] += 1
                self._assign(lit)
                if self._propagate():
                    pos = frame[0] + 1
                    break

    def witness(self) -> frozenset[Pair]:
        n, vs = self.n, self.g.vertices
        return frozenset(
            (vs[var // n], vs[var % n]) for var, val in enumerate(self.value) if val == 1
        )


def _accept(g: OGraph, prec: frozenset[Pair], nodes: int, orientation=None) -> Cert:
    violations = check_axioms(Triple.of(g, prec), cap=1)
    if violations:
        raise GraphError("internal-error", f"witness breaks {violations[0]}")
    both = tuple(sorted(prec & g.arcs, key=g.pair_key))
    if both:
        logger.info(f"Witness puts {len(both)} arc(s) in prec as well, first {both[0]}")
    return Cert(
        ACCEPTED,
        nodes=nodes,
        witness_prec=prec,
        orientation=orientation,
        prec_and_arrow=both,
    )


def _arrow_cycle(g: OGraph) -> Optional[Violation]:
    dg = g.digraph()
    if nx.is_directed_acyclic_graph(dg):
        return None
    return Violation("arrow-cycle", tuple(u for u, _ in nx.find_cycle(dg)))


def recognize_oriented(
    g: OGraph,
    budget: Optional[int] = None,
    hint: Optional[Iterable[Pair]] = None,
) -> Cert:
    """Search for a strict order making (V, ≺, arcs) a Burling set.

    A `hint` order that already satisfies the axioms is accepted without search.
    """
    budget = settings.search_budget if budget is None else budget
    cycle = _arrow_cycle(g)
    if cycle is not None:
        logger.info(f"Rejected: arcs contain the cycle {cycle.ids}")
        return Cert(REJECTED, violated=cycle)
    if hint is not None:
        prec = frozenset((str(u), str(v)) for u, v in hint)
        if not check_axioms(Triple.of(g, prec), cap=1):
            return _accept(g, prec, 0)
    search = _PrecSearch(g, budget)
    violated = search.root()
    if violated is not None:
        logger.info(f"Rejected at the root: {violated.axiom} on {violated.ids}")
        return Cert(REJECTED, violated=violated)
    try:
        found = search.search()
    except _BudgetExceeded:
        logger.info(f"Budget of {budget} nodes exceeded on {len(g.vertices)} vertices")
        return Cert(BUDGET_EXCEEDED, nodes=search.nodes)
    if not found:
        logger.info(f"Rejected after {search.nodes} nodes")
        return Cert(REJECTED, nodes=search.nodes)
    logger.info(f"Accepted after {search.nodes} nodes")
    return _accept(g, search.witness(), search.nodes)


def _as_graph(g) -> nx.Graph:
    if isinstance(g, OGraph):
        return g.underlying()
    if isinstance(g, nx.Graph) and not g.is_directed():
        return g
    raise GraphError("bad-graph", "expected an undirected networkx graph")


def recognize_unoriented(
    g,
    budget: Optional[int] = None,
    seed_orientation: Optional[Iterable[Pair]] = None,
) -> Cert:
    """Search the acyclic orientations of `g` for an abstract Burling one.

    Edges are oriented in a fixed order, first from the earlier vertex; partial
    orientations with a directed cycle are pruned. `seed_orientation` is tried
    before the enumeration.
    """
    budget = settings.search_budget if budget is None else budget
    ug = _as_graph(g)
    vertices = tuple(str(v) for v in ug.nodes)
    if any(u == v for u, v in ug.edges):
        raise GraphError("loop", "graphs must be loop-free")
    index = {v: i for i, v in enumerate(vertices)}
    edges = sorted(
        (tuple(sorted((str(u), str(v)), key=index.__getitem__)) for u, v in ug.edges),
        key=lambda e: (index[e[0]], index[e[1]]),
    )
    spent = 0

    if seed_orientation is not None:
        arcs = frozenset((str(u), str(v)) for u, v in seed_orientation)
        if {frozenset(a) for a in arcs} == {frozenset(e) for e in edges}:
            cert = recognize_oriented(OGraph(vertices, arcs), budget)
            spent += cert.nodes
            if cert.accepted:
                return _with_orientation(cert, arcs, spent)

    dg = nx.DiGraph()
    dg.add_nodes_from(vertices)
    chosen: list[Pair] = []

    def dfs(k: int) -> Optional[Cert]:
        nonlocal spent
        if spent >= budget:
            raise _BudgetExceeded
        if k == len(edges):
            arcs = frozenset(chosen)
            cert = recognize_oriented(OGraph(vertices, arcs), budget - spent)
            spent += cert.nodes
            if cert.verdict == BUDGET_EXCEEDED:
                raise _BudgetExceeded
            return _with_orientation(cert, arcs, spent) if cert.accepted else None
        u, v = edges[k]
        for a, b in ((u, v), (v, u)):
            spent += 1
            if nx.has_path(dg, b, a):
                continue
            dg.add_edge(a, b)
            chosen.append((a, b))
            found = dfs(k + 1)
            chosen.pop()
            dg.remove_edge(a, b)
            if found is not None:
                return found
        return None

    try:
        found = dfs(0)
    except _BudgetExceeded:
        logger.info(f"Budget of {budget} nodes exceeded over orientations")
        return Cert(BUDGET_EXCEEDED, nodes=spent)
    if found is None:
        logger.info(f"No orientation of the {len(vertices)}-vertex graph is Burling")
        return Cert(REJECTED, nodes=spent)
    return found


def _with_orientation(cert: Cert, arcs: frozenset[Pair], spent: int) -> Cert:
    return Cert(
        cert.verdict,
        nodes=spent,
        witness_prec=cert.witness_prec,
        orientation=arcs,
        prec_and_arrow=cert.prec_and_arrow,
    )
