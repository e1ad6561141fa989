"""Exact chromatic number by branch and bound, per connected component.

Lower bound: the clique number, raised to 3 for non-bipartite components.
Upper bound: networkx's saturation greedy colouring. The search then looks for
colourings with fewer colours than the best one known, picking uncoloured
vertices by descending degree with saturation breaking ties. When the node
budget runs out the result is a bracket [lower, upper].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from analysis.graphs import clique_number
from config import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChromaticBracket:
    lower: int
    upper: int
    nodes: int = 0

    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.lower == self.upper else None


class _BudgetExceeded(Exception):
    pass


class _ColoringSearch:
    def __init__(self, g: nx.Graph, lower: int, upper: int, budget: int):
        self.order = list(g.nodes)
        index = {v: i for i, v in enumerate(self.order)}
        self.adj = [sorted(index[u] for u in g[v]) for v in self.order]
        self.degree = [len(a) for a in self.adj]
        self.lower = lower
        self.best = upper
        self.budget = budget
        self.nodes = 0
        self.color = [-1] * len(self.order)

    def _pick(self) -> int:
        best_key, best_v = None, -1
        for v, c in enumerate(self.color):
            if c >= 0:
                continue
            saturation = len({self.color[u] for u in self.adj[v] if self.color[u] >= 0})
            key = (self.degree[v], saturation, -v)
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        return best_v

    def _search(self, colored: int, used: int):
        if self.nodes >= self.budget:
            raise _BudgetExceeded
        self.nodes += 1
        if colored == len(self.order):
            self.best = min(self.best, used)
            return
        v = self._pick()
        taken = {self.color[u] for u in self.adj[v]}
        # colours 0..used-1, or one new colour, staying below the best known
        for c in range(min(used + 1, self.best - 1)):
            if c >= self.best - 1:
                break
            if c in taken:
                continue
            self.color[v] = c
            self._search(colored + 1, max(used, c + 1))
            self.color[v] = -1
            if self.best <= self.lower:
                return

    def run(self) -> ChromaticBracket:
        if self.best > self.lower:
            try:
                self._search(0, 0)
            except _BudgetExceeded:
                return ChromaticBracket(self.lower, self.best, self.nodes)
        # an exhausted search proves the best colouring optimal
        return ChromaticBracket(self.best, self.best, self.nodes)


def _component_bracket(g: nx.Graph, budget: int) -> ChromaticBracket:
    if g.number_of_edges() == 0:
        return ChromaticBracket(1, 1)
    lower = clique_number(g)
    if lower < 3 and not nx.is_bipartite(g):
        lower = 3
    coloring = nx.greedy_color(g, strategy="saturation_largest_first")
    upper = max(coloring.values()) + 1
    return _ColoringSearch(g, lower, upper, budget).run()


def chromatic_number(g: nx.Graph, budget: Optional[int] = None) -> ChromaticBracket:
    budget = settings.chromatic_budget if budget is None else budget
    if g.number_of_nodes() == 0:
        return ChromaticBracket(0, 0)
    lower = upper = 0
    spent = 0
    for nodes in sorted(nx.connected_components(g), key=len, reverse=True):
        part = _component_bracket(g.subgraph(nodes), max(budget - spent, 0))
        spent += part.nodes
        lower = max(lower, part.lower)
        upper = max(upper, part.upper)
    bracket = ChromaticBracket(lower, upper, spent)
    if bracket.exact is None:
        logger.info(f"Chromatic number inconclusive: between {lower} and {upper}")
    else:
        logger.info(f"Chromatic number {bracket.exact} after {spent} nodes")
    return bracket
