"""Exact b-chromatic number by backtracking, for small graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass

from bchromatic.coloring import Coloring
from bchromatic.graph import Graph

DEFAULT_BUDGET = 10**8
MAX_VERTICES = 14


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


@dataclass
class ExactResult:
    b: int
    witness: Coloring
    nodes: int
    seconds: float
    chromatic: int | None = None

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "chromatic_number": self.chromatic,
            "witness": list(self.witness.colors),
            "nodes": self.nodes,
            "seconds": self.seconds,
        }


class _Search:
    def __init__(self, g: Graph, k: int, budget: int):
        self.g, self.k, self.budget = g, k, budget
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.colors = [0] * g.n
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)

    def _could_dominate(self, v: int, j: int) -> bool:
        colors, adj = self.colors, self.g.adj[v]
        own = colors[v]
        if own != j and (own != 0 or any(colors[u] == j for u in adj)):
            return False
        seen = {colors[u] for u in adj}
        open_slots = sum(1 for u in adj if colors[u] == 0)
        missing = sum(1 for c in range(1, self.k + 1) if c != j and c not in seen)
        return missing <= open_slots

    def _feasible(self) -> bool:
        return all(any(self._could_dominate(v, j) for v in range(self.g.n)) for j in range(1, self.k + 1))

    def run(self, idx: int = 0, top: int = 0) -> bool:
        self._tick()
        n = self.g.n
        if self.k - top > n - idx:
            return False
        if not self._feasible():
            return False
        if idx == n:
            return top == self.k
        v = self.order[idx]
        blocked = {self.colors[u] for u in self.g.adj[v]}
        # New colors appear in increasing order, which removes palette symmetry.
        for col in range(1, min(top + 1, self.k) + 1):
            if col in blocked:
                continue
            self.colors[v] = col
            if self.run(idx + 1, max(top, col)):
                return True
        self.colors[v] = 0
        return False


def exists_b_coloring(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> Coloring | None:
    """A b-coloring of ``g`` using exactly ``k`` colors, or None if none exists.

    Raises BudgetExceeded rather than returning None when the search is cut short.
    """
    return _exists(g, k, budget)[0]


def _exists(g: Graph, k: int, budget: int) -> tuple[Coloring | None, int]:
    if k < 1:
        raise ValueError("k must be positive")
    search = _Search(g, k, budget)
    if not search.run():
        return None, search.nodes
    return Coloring(tuple(search.colors), k), search.nodes


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    nodes = 0

    def colorable(k: int) -> bool:
        colors = [0] * g.n

        def rec(idx: int, top: int) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(budget)
            if idx == g.n:
                return True
            v = order[idx]
            blocked = {colors[u] for u in g.adj[v]}
            for col in range(1, min(top + 1, k) + 1):
                if col not in blocked:
                    colors[v] = col
                    if rec(idx + 1, max(top, col)):
                        return True
            colors[v] = 0
            return False

        return rec(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def exact_b_chromatic(g: Graph, budget: int = DEFAULT_BUDGET, max_vertices: int = MAX_VERTICES) -> ExactResult:
    """Largest k <= max degree + 1 admitting a b-coloring, searched from the top down."""
    if g.n > max_vertices:
        raise ValueError(f"exact search is limited to {max_vertices} vertices (graph has {g.n})")
    start = time.perf_counter()
    if g.n == 0:
        return ExactResult(0, Coloring((), 0), 0, 0.0, 0)
    nodes = 0
    for k in range(g.max_degree + 1, 0, -1):
        witness, used = _exists(g, k, budget - nodes)
        nodes += used
        if witness is not None:
            return ExactResult(k, witness, nodes, time.perf_counter() - start, chromatic_number(g, budget))
    raise AssertionError("every graph has a b-coloring with its chromatic number of colors")
